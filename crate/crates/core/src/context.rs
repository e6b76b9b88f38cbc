//! Shared state for computations on one root datum.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::affine::{AffineElement, AffineWeyl};
use crate::conjugacy::{CyclicShiftClass, StandardData};
use crate::error::Result;
use crate::nodeset::NodeSet;
use crate::rootdatum::RootDatum;

/// Default node budget for equal-length plateau searches.
pub const DEFAULT_BUDGET: usize = 500_000;

#[derive(Default)]
pub(crate) struct Registry {
    pub classes: Vec<Arc<CyclicShiftClass>>,
    pub index: HashMap<AffineElement, usize>,
    pub sigma: HashMap<AffineElement, (usize, i8)>,
    pub standard: HashMap<usize, Arc<StandardData>>,
}

/// A root datum together with its affine Weyl group, the parabolic
/// systems `W_J` built on demand, and a registry of cyclic-shift classes.
pub struct Context {
    rd: Arc<RootDatum>,
    full: Arc<AffineWeyl>,
    systems: RwLock<HashMap<NodeSet, Arc<AffineWeyl>>>,
    pub(crate) registry: RwLock<Registry>,
    pub(crate) budget: usize,
}

impl Context {
    pub fn new(rd: RootDatum) -> Self {
        let rd = Arc::new(rd);
        let full = Arc::new(AffineWeyl::full(rd.clone()));
        let mut systems = HashMap::new();
        systems.insert(rd.all_simple(), full.clone());
        Context {
            rd,
            full,
            systems: RwLock::new(systems),
            registry: RwLock::new(Registry::default()),
            budget: DEFAULT_BUDGET,
        }
    }

    /// A built-in datum name or a JSON file path.
    pub fn load(name_or_path: &str) -> Result<Self> {
        Ok(Self::new(RootDatum::load(name_or_path)?))
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn group(&self) -> &AffineWeyl {
        &self.full
    }

    pub fn group_arc(&self) -> &Arc<AffineWeyl> {
        &self.full
    }

    /// The system `W_J` with its own simple reflections and `Ω_J`.
    pub fn system(&self, j: NodeSet) -> Arc<AffineWeyl> {
        if let Some(s) = self.systems.read().unwrap().get(&j) {
            return s.clone();
        }
        let s = Arc::new(AffineWeyl::new(self.rd.clone(), j));
        self.systems.write().unwrap().entry(j).or_insert(s).clone()
    }
}
