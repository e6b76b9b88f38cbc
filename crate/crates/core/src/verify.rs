//! The acceptance checks, each a bounded exhaustive or seeded-random
//! comparison against an independent computation.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::AffineElement;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::Q;
use crate::hecke::{GenericElement, HeckeAlgebra, ZeroElement};
use crate::laurent::LaurentPoly;
use crate::linalg::Matrix;
use crate::nodeset::NodeSet;
use crate::representations::{
    all_pairs, char_formula, class_pair, decompose, induce_q, is_rigid, is_supersingular_pair, supersingular_bound,
    supersingular_evidence, Candidate, Character, EBasisTable, FormulaCase, FormulaValue, ParahoricDatum, Verdict,
};

/// Catalog data with finite `Ω` used by default.
pub const ACCEPTANCE_DATA: &[&str] = &["A1-sc", "A1-ad", "A2-sc", "A2-ad", "C2", "G2"];

const SEED: u64 = 0x0c0c_e27e;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct PhaseReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl PhaseReport {
    pub fn line(&self) -> String {
        format!(
            "{} {:>2} {:<28} {:>7.2}s/{:>3}s  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.detail
        )
    }
}

pub const PHASES: &[(u8, &str, u64)] = &[
    (1, "length agreement", 60),
    (2, "hecke relations", 60),
    (3, "cocenter kernel", 120),
    (4, "sigma path independence", 120),
    (5, "power window", 60),
    (6, "length identities", 120),
    (7, "character formula", 300),
    (8, "rank and decomposition", 300),
    (9, "rigid and supersingular", 300),
    (10, "e-basis integrity", 120),
];

fn violation(msg: String) -> Error {
    Error::Violation(msg)
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 { 1 } else { -1 }
}

/// Runs the acceptance checks over a set of data.
pub struct Verifier {
    contexts: BTreeMap<String, Context>,
    max_len: Option<u32>,
}

impl Verifier {
    pub fn new(data: &[&str], max_len: Option<u32>) -> Result<Self> {
        let mut contexts = BTreeMap::new();
        for &d in data {
            let ctx = Context::load(d)?;
            contexts.insert(ctx.datum().name().to_string(), ctx);
        }
        Ok(Verifier { contexts, max_len })
    }

    fn bound(&self, default: u32) -> u32 {
        self.max_len.unwrap_or(default)
    }

    /// Loaded data among `names` (all loaded data if `names` is empty),
    /// skipping infinite `Ω`.
    fn data(&self, names: &[&str]) -> Vec<&Context> {
        self.contexts
            .iter()
            .filter(|(n, ctx)| (names.is_empty() || names.contains(&n.as_str())) && ctx.group().omega().is_finite())
            .map(|(_, c)| c)
            .collect()
    }

    pub fn run_all(&self) -> Vec<PhaseReport> {
        PHASES.iter().map(|&(id, _, _)| self.run(id)).collect()
    }

    pub fn run(&self, id: u8) -> PhaseReport {
        let &(_, name, limit) = PHASES.iter().find(|p| p.0 == id).expect("phase id");
        let start = Instant::now();
        let out = match id {
            1 => self.lengths(),
            2 => self.hecke_relations(),
            3 => self.cocenter_kernel(),
            4 => self.sigma(),
            5 => self.power_window(),
            6 => self.length_identities(),
            7 => self.character_formula(),
            8 => self.rank_and_decomposition(),
            9 => self.rigid_and_supersingular(),
            _ => self.e_basis(),
        };
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (passed, detail) = match out {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over time limit")),
            Err(e) => (false, e.to_string()),
        };
        PhaseReport { id, name, passed, detail, elapsed, limit }
    }

    fn lengths(&self) -> Result<String> {
        let l = self.bound(8);
        let mut n = 0;
        for ctx in self.data(&[]) {
            let g = ctx.group();
            for (len, level) in cayley_levels(g, l)?.into_iter().enumerate() {
                for e in level {
                    let a = g.length(&e);
                    let b = g.length_hyperplanes(&e);
                    let c = g.reduced_word(&e).0.len() as u32;
                    if a != len as u32 || a != b || a != c || g.length(&g.inverse(&e)) != a {
                        return Err(violation(format!(
                            "{}: {} has lengths {a}/{b}/{c} at level {len}",
                            ctx.datum().name(),
                            g.display(&e)
                        )));
                    }
                    n += 1;
                }
            }
        }
        Ok(format!("{n} elements, ℓ ≤ {l}"))
    }

    fn hecke_relations(&self) -> Result<String> {
        let l = self.bound(5);
        let data = self.data(&[]);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let triples = if l == 0 { 0 } else { 10_000 };
        let mut relations = 0;
        let mut modules = 0;
        for (i, ctx) in data.iter().enumerate() {
            let g = ctx.group();
            let h = HeckeAlgebra::new(ctx.group_arc().clone());
            relations += check_generators(ctx, &h)?;
            for (j, gamma) in all_pairs(ctx) {
                let pd = ParahoricDatum::new(ctx, j, gamma)?;
                induce_q(ctx, &pd, &Character::trivial(&pd))?.check_relations()?;
                modules += 1;
            }
            let elems: Vec<AffineElement> = g.enumerate(l)?.into_iter().flatten().collect();
            let share = triples / data.len() + usize::from(i < triples % data.len());
            for _ in 0..share {
                let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..elems.len())].clone();
                let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let (za, zb, zc) = (ZeroElement::basis(&a), ZeroElement::basis(&b), ZeroElement::basis(&c));
                if h.mul(&h.mul(&za, &zb), &zc) != h.mul(&za, &h.mul(&zb, &zc)) {
                    return Err(violation(format!("0-mode associativity fails at {}", triple(g, &a, &b, &c))));
                }
                let (ga, gb, gc) = (GenericElement::basis(&a), GenericElement::basis(&b), GenericElement::basis(&c));
                if h.mul(&h.mul(&ga, &gb), &gc) != h.mul(&ga, &h.mul(&gb, &gc)) {
                    return Err(violation(format!("generic associativity fails at {}", triple(g, &a, &b, &c))));
                }
            }
        }
        Ok(format!(
            "{relations} generator relations, {modules} module presentations, {triples} triples"
        ))
    }

    fn cocenter_kernel(&self) -> Result<String> {
        let l = self.bound(6);
        let mut checked = 0;
        for ctx in self.data(&["A1-sc", "A2-ad"]) {
            let r = ctx.commutator_check(l)?;
            if let Some(v) = r.violations.first() {
                return Err(violation(format!("{}: {v}", ctx.datum().name())));
            }
            checked += r.checked;
        }
        Ok(format!("{checked} commutators, ℓ ≤ {l}"))
    }

    fn sigma(&self) -> Result<String> {
        let l = self.bound(5);
        let mut n = 0;
        for ctx in self.data(&["A2-ad"]) {
            let g = ctx.group();
            for e in g.enumerate(l)?.into_iter().flatten() {
                let s = ctx.sigma(&e)?;
                let all = ctx.sigma_all_choices(&e)?;
                if all.len() != 1 || !all.contains(&s) {
                    return Err(violation(format!("{}: reductions of {} disagree: {all:?}", ctx.datum().name(), g.display(&e))));
                }
                let brute = ctx.sigma_bruteforce(&e)?;
                if brute != s.0 {
                    return Err(violation(format!("{}: maximal class below {} differs", ctx.datum().name(), g.display(&e))));
                }
                n += 1;
            }
        }
        Ok(format!("{n} elements, ℓ ≤ {l}"))
    }

    fn power_window(&self) -> Result<String> {
        let l = self.bound(5);
        let mut classes = 0;
        let mut worst = 0;
        for ctx in self.data(&[]) {
            let g = ctx.group();
            let h = HeckeAlgebra::new(ctx.group_arc().clone());
            let n0 = ctx.datum().weyl().order() as u64;
            for class in ctx.enumerate_classes(l)? {
                let d = ctx.standard_data(&class)?;
                let wk = g.longest(d.k);
                let start = n0 * (1 + max_pairing(ctx, &[&d.member, &d.y]));
                let lw = i64::from(g.length(&d.w));
                let lk = i64::from(g.length(&wk));
                let mut cur = ZeroElement::basis(&d.member);
                let mut yn = d.y.clone();
                let mut holds = Vec::new();
                for n in 1..=start + n0 {
                    let expect = ZeroElement::term(&g.mul(&wk, &yn), sign(n as i64 * lw - lk));
                    holds.push(cur == expect);
                    cur = h.mul_basis_right(&cur, &d.member);
                    yn = g.mul(&yn, &d.y);
                }
                let n = threshold(&holds, start, n0).ok_or_else(|| {
                    violation(format!(
                        "{}: no verified window for {} up to n = {start}",
                        ctx.datum().name(),
                        g.display(&d.member)
                    ))
                })?;
                worst = worst.max(n);
                classes += 1;
            }
        }
        Ok(format!("{classes} classes, largest threshold n = {worst}"))
    }

    fn length_identities(&self) -> Result<String> {
        let l = self.bound(5);
        let mut classes = 0;
        let mut worst = 0;
        for ctx in self.data(&["A2-ad", "C2"]) {
            let g = ctx.group();
            let rd = ctx.datum();
            let weyl = rd.weyl();
            let n0 = weyl.order() as u64;
            for class in ctx.enumerate_classes(l)? {
                let d = ctx.standard_data(&class)?;
                let p = &d.pair;
                let wg = ctx.system(p.j).longest(p.gamma);
                let wk = g.longest(d.k);
                let us = rd.min_left_coset_reps(p.j);
                let word = weyl.word(d.z).to_vec();
                let xn0 = g.length(&g.pow(&p.x, n0));
                let start = n0 * (1 + max_pairing(ctx, &[&p.x]));
                let holds: Vec<bool> = (1..=start + n0)
                    .map(|n| {
                        let e = g.mul(&wg, &g.pow(&p.x, n));
                        let le = g.length(&e);
                        let conj_ok = us.iter().all(|&u| {
                            let u = g.finite(u);
                            g.length(&g.mul(&g.mul(&g.inverse(&u), &e), &u)) == le
                        });
                        let step_ok = g.length(&g.mul(&wg, &g.pow(&p.x, n + n0))) == le + xn0;
                        let mut cur = e.clone();
                        let mut path_ok = true;
                        for &s in &word {
                            cur = g.conj_simple(s as usize, &cur);
                            path_ok &= g.length(&cur) == le;
                        }
                        path_ok &= cur == g.mul(&wk, &g.pow(&d.y, n));
                        conj_ok && step_ok && path_ok
                    })
                    .collect();
                let n = threshold(&holds, start, n0).ok_or_else(|| {
                    violation(format!(
                        "{}: no verified window for the pair of {} up to n = {start}",
                        rd.name(),
                        g.display(&class.rep)
                    ))
                })?;
                worst = worst.max(n);
                classes += 1;
            }
        }
        Ok(format!("{classes} classes, largest threshold n = {worst}"))
    }

    fn character_formula(&self) -> Result<String> {
        let l = self.bound(5);
        let free = [Q::from_integer(1), Q::from_integer(-1), Q::from_integer(2), Q::new(1, 2)];
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        let mut modules = 0;
        for ctx in self.data(&[]) {
            let g = ctx.group();
            let classes = ctx.enumerate_classes(l)?;
            for (j, gamma) in all_pairs(ctx) {
                let pd = ParahoricDatum::new(ctx, j, gamma)?;
                for chi in Character::catalog(&pd, &free) {
                    let m = induce_q(ctx, &pd, &chi)?;
                    modules += 1;
                    for c in &classes {
                        let (case, v) = char_formula(ctx, c, &pd, &chi)?;
                        let key = match case {
                            FormulaCase::NotContained => "case1",
                            FormulaCase::NotInStabilizer => "case2",
                            FormulaCase::Stabilized => "case3",
                            FormulaCase::NotCovered => "not-covered",
                        };
                        *counts.entry(key).or_default() += 1;
                        if let FormulaValue::Value(v) = v {
                            let t = m.trace(&c.rep);
                            if v != t {
                                return Err(violation(format!(
                                    "{}: {pd:?} {chi:?} at {}: formula {v}, trace {t}",
                                    ctx.datum().name(),
                                    g.display(&c.rep)
                                )));
                            }
                        }
                    }
                }
            }
        }
        let cases: Vec<String> = counts.iter().map(|(k, v)| format!("{k} {v}")).collect();
        Ok(format!("{modules} modules; {}", cases.join(", ")))
    }

    fn rank_and_decomposition(&self) -> Result<String> {
        let l = self.bound(5);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
        let mut total = 0;
        let mut trips = 0;
        let mut used = Vec::new();
        for ctx in self.data(&[]) {
            if l == 0 {
                continue;
            }
            let l = realizing_bound(ctx, l)?;
            used.push(format!("{} {l}", ctx.datum().name()));
            let classes = ctx.enumerate_classes(l)?;
            let cands = catalog_candidates(ctx, &classes)?;
            let rows: Vec<Vec<Q>> = cands.iter().map(|k| k.chars.clone()).collect();
            let rank = if classes.is_empty() { 0 } else { Matrix::from_rows(rows).rank() };
            if rank != cands.len() {
                return Err(violation(format!(
                    "{}: rank {rank} for {} modules on {} classes",
                    ctx.datum().name(),
                    cands.len(),
                    classes.len()
                )));
            }
            total += cands.len();
            for _ in 0..25 {
                let want: Vec<i64> = (0..cands.len()).map(|_| rng.gen_range(-3..=3)).collect();
                let target: Vec<Q> = (0..classes.len())
                    .map(|i| cands.iter().zip(&want).map(|(k, &c)| k.chars[i] * Q::from_integer(c as i128)).sum())
                    .collect();
                let got = decompose(ctx, &target, &classes, &cands)?;
                if got != want {
                    return Err(violation(format!("{}: decomposition {got:?} != {want:?}", ctx.datum().name())));
                }
                trips += 1;
            }
        }
        Ok(format!("{total} modules at full rank, {trips} round trips; ℓ ≤ {}", used.join(", ")))
    }

    fn rigid_and_supersingular(&self) -> Result<String> {
        let l = self.bound(6);
        let mut tested = 0;
        let mut supersingular = 0;
        let mut e_windows = 0;
        let mut used = Vec::new();
        for ctx in self.data(&[]) {
            if l == 0 {
                continue;
            }
            let name = ctx.datum().name();
            let f = ctx.datum().all_simple();
            let lt = realizing_bound(ctx, l)?;
            used.push(format!("{name} {lt}"));
            let classes = ctx.enumerate_classes(lt)?;
            let cands = catalog_candidates(ctx, &classes)?;
            let nss = ctx.nss_spanning_set(lt)?;
            let elements: Vec<AffineElement> = ctx.group().enumerate(l)?.into_iter().flatten().collect();
            let table = EBasisTable::new(ctx, 2);
            for k in &cands {
                let m = induce_q(ctx, &k.pd, &k.chi)?;
                let full = k.pd.j == f;
                let ss = full && is_supersingular_pair(ctx, k.pair);
                let lower = if full { supersingular_bound(ctx, k.pd.gamma).unwrap_or(0) } else { 0 };
                let ev = supersingular_evidence(ctx, &m, &k.chars, &classes, &nss, &cands, &elements, &table, lower, l)?;
                let verdict = ev.verdict().map_err(|e| violation(format!("{name}: {}: {e}", k.label())))?;
                let rigid = is_rigid(ctx, &classes, &k.chars);
                if full && !rigid {
                    return Err(violation(format!("{name}: {} is not rigid", k.label())));
                }
                if verdict != ss {
                    return Err(violation(format!("{name}: {} supersingular = {verdict}", k.label())));
                }
                if ss && ev.e_vanishing == Verdict::Fail {
                    return Err(violation(format!("{name}: E_w does not kill {}", k.label())));
                }
                if k.pd.j.is_empty() && k.pd.gamma.is_empty() && (rigid || verdict) && !classes.is_empty() {
                    return Err(violation(format!("{name}: {} is rigid or supersingular", k.label())));
                }
                supersingular += usize::from(ss);
                e_windows += usize::from(ev.e_vanishing != Verdict::Vacuous);
                tested += 1;
            }
        }
        Ok(format!(
            "{tested} modules, {supersingular} supersingular, {e_windows} with a non-empty E-window; traces at ℓ ≤ {}",
            used.join(", ")
        ))
    }

    fn e_basis(&self) -> Result<String> {
        let l = self.bound(6);
        let mut elements = 0;
        let mut support_checks = 0;
        for ctx in self.data(&["A1-sc", "A2-ad"]) {
            let g = ctx.group();
            let h = HeckeAlgebra::new(ctx.group_arc().clone());
            let gammas: Vec<(NodeSet, u32)> = g
                .all_nodes()
                .subsets()
                .into_iter()
                .filter(|&k| g.is_finite_type(k))
                .map(|k| (k, 2 * g.parabolic(k).len() as u32))
                .collect();
            for w in g.enumerate(l)?.into_iter().flatten() {
                let (generic, zero) = h.e_basis_checked(&w, 3)?;
                if !generic.terms().all(|(_, c): (_, &LaurentPoly)| c.is_polynomial_in_q()) {
                    return Err(violation(format!("E_{} is not integral in q", g.display(&w))));
                }
                let iota = h.iota(&zero);
                let lw = g.length(&w);
                for &(gamma, b) in &gammas {
                    if lw <= b {
                        continue;
                    }
                    let outside = |a: &ZeroElement| a.terms().all(|(z, _)| !g.support(z).is_subset(gamma));
                    if !outside(&zero) && !outside(&iota) {
                        return Err(violation(format!(
                            "E_{} has support inside {:?}",
                            g.display(&w),
                            g.node_names(gamma)
                        )));
                    }
                    support_checks += 1;
                }
                elements += 1;
            }
        }
        Ok(format!("{elements} elements, 3 choices each, {support_checks} support checks"))
    }
}

/// Elements by distance from `Ω` in the Cayley graph on `S_aff`.
fn cayley_levels(g: &crate::affine::AffineWeyl, max_len: u32) -> Result<Vec<Vec<AffineElement>>> {
    let mut levels = vec![g.omega_elements()?];
    let mut seen: std::collections::HashSet<AffineElement> = levels[0].iter().cloned().collect();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for e in levels.last().unwrap() {
            for s in 0..g.num_simple() {
                let n = g.mul(g.s(s), e);
                if seen.insert(n.clone()) {
                    next.push(n);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

fn triple(g: &crate::affine::AffineWeyl, a: &AffineElement, b: &AffineElement, c: &AffineElement) -> String {
    format!("({}, {}, {})", g.display(a), g.display(b), g.display(c))
}

fn max_pairing(ctx: &Context, es: &[&AffineElement]) -> u64 {
    es.iter()
        .flat_map(|e| ctx.datum().roots().iter().map(move |r| r.pair(&e.t).unsigned_abs()))
        .max()
        .unwrap_or(0)
}

/// Smallest bound `≥ min` at which every catalog pair is the standard pair
/// of some class.
pub fn realizing_bound(ctx: &Context, min: u32) -> Result<u32> {
    let pairs = all_pairs(ctx);
    for l in min..=MAX_REALIZING_BOUND {
        let classes = ctx.enumerate_classes(l)?;
        let seen = classes
            .iter()
            .map(|c| class_pair(ctx, c))
            .collect::<Result<std::collections::HashSet<_>>>()?;
        if pairs.iter().all(|p| seen.contains(p)) {
            return Ok(l);
        }
    }
    Err(violation(format!(
        "{}: some pair has no class of length ≤ {MAX_REALIZING_BOUND}",
        ctx.datum().name()
    )))
}

const MAX_REALIZING_BOUND: u32 = 24;

/// Smallest `n ≤ start` with `holds[n..=n+n0]` (1-based) all true.
fn threshold(holds: &[bool], start: u64, n0: u64) -> Option<u64> {
    (1..=start).find(|&n| (n..=n + n0).all(|k| holds[(k - 1) as usize]))
}

/// Quadratic, braid and `Ω`-compatibility relations among the generators in
/// both modes.
fn check_generators(ctx: &Context, h: &HeckeAlgebra) -> Result<usize> {
    let g = ctx.group();
    let n = g.num_simple();
    let name = ctx.datum().name();
    let mut count = 0;
    for s in 0..n {
        let ts = ZeroElement::basis(g.s(s));
        if h.mul(&ts, &ts) != ts.neg() {
            return Err(violation(format!("{name}: T_s^2 != -T_s for {}", g.simple()[s].name)));
        }
        let gs = GenericElement::basis(g.s(s));
        let q = LaurentPoly::q();
        let expect = gs
            .scale(&(&q - &LaurentPoly::one()))
            .add(&GenericElement::term(&g.identity(), q.clone()));
        if h.mul(&gs, &gs) != expect {
            return Err(violation(format!("{name}: generic quadratic relation for {}", g.simple()[s].name)));
        }
        count += 2;
        for t in s + 1..n {
            let st = g.mul(g.s(s), g.s(t));
            let Some(m) = (1..=12u64).find(|&k| g.pow(&st, k) == g.identity()) else {
                continue;
            };
            let word = |a: usize, b: usize| -> Vec<usize> { (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect() };
            let prod_zero = |w: &[usize]| w.iter().fold(h.one::<i64>(), |acc, &i| h.mul_simple_right(&acc, i));
            let prod_gen = |w: &[usize]| w.iter().fold(h.one::<LaurentPoly>(), |acc, &i| h.mul_simple_right(&acc, i));
            if prod_zero(&word(s, t)) != prod_zero(&word(t, s)) || prod_gen(&word(s, t)) != prod_gen(&word(t, s)) {
                return Err(violation(format!(
                    "{name}: braid relation for {} {}",
                    g.simple()[s].name,
                    g.simple()[t].name
                )));
            }
            count += 2;
        }
    }
    let om = g.omega();
    for (tau, inv) in om.generators.iter().zip(&om.inverses) {
        for s in 0..n {
            let target = g.mul(&g.mul(tau, g.s(s)), inv);
            let z = h.mul(&h.mul(&ZeroElement::basis(tau), &ZeroElement::basis(g.s(s))), &ZeroElement::basis(inv));
            let q = h.mul(
                &h.mul(&GenericElement::basis(tau), &GenericElement::basis(g.s(s))),
                &GenericElement::basis(inv),
            );
            if z != ZeroElement::basis(&target) || q != GenericElement::basis(&target) {
                return Err(violation(format!("{name}: Ω-compatibility for {}", g.simple()[s].name)));
            }
            count += 2;
        }
    }
    Ok(count)
}

/// `π_{J,Γ,χ}` for every canonical pair, with `χ` ranging over `±1` on
/// torsion generators and trivial on free ones.
pub fn catalog_candidates(
    ctx: &Context,
    classes: &[std::sync::Arc<crate::conjugacy::CyclicShiftClass>],
) -> Result<Vec<Candidate>> {
    let mut out = Vec::new();
    for (j, gamma) in all_pairs(ctx) {
        let pd = ParahoricDatum::new(ctx, j, gamma)?;
        for chi in Character::catalog(&pd, &[Q::from_integer(1)]) {
            out.push(Candidate::build(ctx, ParahoricDatum::new(ctx, j, gamma)?, chi, classes)?);
        }
    }
    Ok(out)
}
