//! Text forms of elements, node sets, characters and index sets.
//!
//! Elements are `*`-separated factors, each optionally raised to an integer
//! power with `^n`:
//!
//! ```text
//! e | t[1,-1] | s1 | s0 | tau1 | [s0*s1]^3 | t[1]*s1^-1
//! ```

use crate::affine::{AffineElement, AffineWeyl};
use crate::error::{parse_err, Result};
use crate::field::{parse_q, Q};
use crate::nodeset::NodeSet;

fn split_top(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(parse_err("element", format!("unbalanced `]` in `{s}`")));
                }
            }
            '*' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(parse_err("element", format!("unbalanced `[` in `{s}`")));
    }
    out.push(s[start..].trim());
    Ok(out)
}

fn parse_factor(g: &AffineWeyl, f: &str) -> Result<AffineElement> {
    if f.is_empty() {
        return Err(parse_err("element", "empty factor"));
    }
    let (base, exp) = match f.rfind('^') {
        Some(i) if !f[i..].contains(']') => {
            let n: i64 = f[i + 1..]
                .trim()
                .parse()
                .map_err(|_| parse_err("element", format!("bad exponent in `{f}`")))?;
            (f[..i].trim(), n)
        }
        _ => (f, 1),
    };
    let x = if base == "e" || base == "1" {
        g.identity()
    } else if let Some(inner) = base.strip_prefix("t[").and_then(|r| r.strip_suffix(']')) {
        let v = inner
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| parse_err("element", format!("bad translation `{base}`")))?;
        if v.len() != g.datum().rank() {
            return Err(parse_err(
                "element",
                format!("translation `{base}` has {} entries, rank is {}", v.len(), g.datum().rank()),
            ));
        }
        g.translation(&v)
    } else if let Some(inner) = base.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        parse_element(g, inner)?
    } else if let Some(k) = base.strip_prefix("tau") {
        let k: usize = k
            .parse()
            .map_err(|_| parse_err("element", format!("bad Ω generator `{base}`")))?;
        let om = g.omega();
        if k == 0 || k > om.generators.len() {
            return Err(parse_err(
                "element",
                format!("`{base}`: Ω has {} generators", om.generators.len()),
            ));
        }
        om.generators[k - 1].clone()
    } else if let Some(i) = g.node_index(base) {
        g.s(i).clone()
    } else {
        return Err(parse_err("element", format!("unknown factor `{base}`")));
    };
    Ok(if exp >= 0 {
        g.pow(&x, exp as u64)
    } else {
        g.pow(&g.inverse(&x), exp.unsigned_abs())
    })
}

/// Parses an element literal such as `t[1,0]*s1*s0`.
pub fn parse_element(g: &AffineWeyl, s: &str) -> Result<AffineElement> {
    let mut out = g.identity();
    for f in split_top(s.trim())? {
        let x = parse_factor(g, f)?;
        if !g.in_group(&x) {
            return Err(parse_err("element", format!("`{f}` is not in this group")));
        }
        out = g.mul(&out, &x);
    }
    Ok(out)
}

/// Parses node names such as `s0,s2`; `{}`, `-` and the empty string give
/// the empty set.
pub fn parse_nodes(g: &AffineWeyl, s: &str) -> Result<NodeSet> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut out = NodeSet::EMPTY;
    for name in s.split([',', ' ']).map(str::trim).filter(|x| !x.is_empty() && *x != "-") {
        let i = g
            .node_index(name)
            .ok_or_else(|| parse_err("node set", format!("unknown node `{name}`")))?;
        out = out.with(i);
    }
    Ok(out)
}

/// Parses finite simple roots given as `1,2` or `s1,s2` (1-based).
pub fn parse_simple(rank: usize, s: &str) -> Result<NodeSet> {
    let s = s.trim().trim_start_matches('{').trim_end_matches('}');
    let mut out = NodeSet::EMPTY;
    for tok in s.split([',', ' ']).map(str::trim).filter(|x| !x.is_empty() && *x != "-") {
        let k: usize = tok
            .trim_start_matches('s')
            .parse()
            .map_err(|_| parse_err("simple roots", format!("bad index `{tok}`")))?;
        if k == 0 || k > rank {
            return Err(parse_err("simple roots", format!("index {k} out of range 1..={rank}")));
        }
        out = out.with(k - 1);
    }
    Ok(out)
}

/// Parses a comma-separated list of rationals such as `1,-1,1/2`.
pub fn parse_values(s: &str) -> Result<Vec<Q>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| parse_q(x).ok_or_else(|| parse_err("character", format!("bad rational `{x}`"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;

    #[test]
    fn round_trips_display() {
        let ctx = Context::load("A2-sc").unwrap();
        let g = ctx.group();
        for e in g.enumerate(3).unwrap().into_iter().flatten() {
            assert_eq!(parse_element(g, &g.display(&e)).unwrap(), e);
        }
    }

    #[test]
    fn words_and_powers() {
        let ctx = Context::load("A1-sc").unwrap();
        let g = ctx.group();
        let a = parse_element(g, "s0*s1*s0*s1").unwrap();
        assert_eq!(parse_element(g, "[s0*s1]^2").unwrap(), a);
        assert_eq!(parse_element(g, "s1^-1").unwrap(), g.s(0).clone());
        let tau = parse_element(g, "tau1").unwrap();
        assert_eq!(g.length(&tau), 0);
        assert_eq!(parse_element(g, "tau1^2").unwrap(), g.identity());
    }

    #[test]
    fn errors_are_reported() {
        let ctx = Context::load("A2-ad").unwrap();
        let g = ctx.group();
        assert!(parse_element(g, "t[1]").is_err());
        assert!(parse_element(g, "s7").is_err());
        assert!(parse_element(g, "[s1").is_err());
        assert!(parse_element(g, "tau1").is_err());
        assert!(parse_nodes(g, "s0,x").is_err());
        assert_eq!(parse_nodes(g, "{s0, s2}").unwrap(), NodeSet::from_indices([2, 1]));
        assert_eq!(parse_simple(2, "s2").unwrap(), NodeSet::single(1));
        assert_eq!(parse_values("1,-1/2").unwrap(), vec![Q::from_integer(1), Q::new(-1, 2)]);
    }
}
