use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::groebner::{buchberger_capped, GroebnerBasis, DEFAULT_DEGREE_CAP};
use crate::poly::{parse_polynomial, Field, MonomialOrder, Polynomial};

use super::ideal::IdealHandle;

/// `A = D/𝔞` localized at the origin, `D = k[variables]`.
#[derive(Clone)]
pub struct RingPresentation {
    inner: Arc<RingInner>,
}

struct RingInner {
    field: Field,
    names: Vec<String>,
    relations: Vec<Polynomial>,
    degree_cap: u32,
    relation_gb: OnceLock<GroebnerBasis>,
    dimension: OnceLock<usize>,
    // lifted GB of J -> lifted GBs of J^1, J^2, ...
    powers: Mutex<HashMap<GroebnerBasis, Vec<GroebnerBasis>>>,
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingPresentation")
            .field("field", &self.inner.field)
            .field("variables", &self.inner.names)
            .field("relations", &self.relation_strings())
            .finish()
    }
}

impl PartialEq for RingPresentation {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &o.inner)
            || (self.inner.field == o.inner.field
                && self.inner.names == o.inner.names
                && self.inner.relations == o.inner.relations)
    }
}

impl RingPresentation {
    pub fn new(field: Field, names: Vec<String>, relations: Vec<Polynomial>) -> Result<Self> {
        for (i, r) in relations.iter().enumerate() {
            if r.nvars() != names.len() || r.field() != field {
                return Err(Error::RingMismatch(format!("relation {i} is over another ring")));
            }
            if !r.constant_term().is_zero() {
                return Err(Error::Precondition(format!(
                    "relation `{}` has nonzero constant term",
                    r.format(&names)
                )));
            }
        }
        let relations = relations
            .into_iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.with_order(MonomialOrder::GrevLex))
            .collect();
        Ok(RingPresentation {
            inner: Arc::new(RingInner {
                field,
                names,
                relations,
                degree_cap: DEFAULT_DEGREE_CAP,
                relation_gb: OnceLock::new(),
                dimension: OnceLock::new(),
                powers: Mutex::new(HashMap::new()),
            }),
        })
    }

    /// Polynomial ring `k[names]`.
    pub fn regular(field: Field, names: &[&str]) -> Self {
        let names = names.iter().map(|s| s.to_string()).collect();
        RingPresentation::new(field, names, Vec::new()).expect("no relations")
    }

    pub fn parse(field: Field, names: &[&str], relations: &[&str]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|s| parse_polynomial(s, &names, field, MonomialOrder::GrevLex))
            .collect::<Result<Vec<_>>>()?;
        RingPresentation::new(field, names, rels)
    }

    pub fn field(&self) -> Field {
        self.inner.field
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn nvars(&self) -> usize {
        self.inner.names.len()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.inner.relations
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.inner.relations.iter().map(|r| r.format(&self.inner.names)).collect()
    }

    pub fn degree_cap(&self) -> u32 {
        self.inner.degree_cap
    }

    pub fn same_ring(&self, o: &RingPresentation) -> Result<()> {
        if self == o {
            Ok(())
        } else {
            Err(Error::RingMismatch("ideals belong to different rings".into()))
        }
    }

    /// Reduced grevlex basis of 𝔞.
    pub fn relation_gb(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.inner.relation_gb.get() {
            return Ok(g);
        }
        let g = buchberger_capped(
            self.nvars(),
            self.field(),
            &self.inner.relations,
            MonomialOrder::GrevLex,
            self.inner.degree_cap,
        )?;
        let _ = self.inner.relation_gb.set(g);
        Ok(self.inner.relation_gb.get().unwrap())
    }

    pub fn parse_poly(&self, src: &str) -> Result<Polynomial> {
        parse_polynomial(src, &self.inner.names, self.field(), MonomialOrder::GrevLex)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), self.field(), MonomialOrder::GrevLex, i)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars(), self.field(), MonomialOrder::GrevLex)
    }

    pub fn ideal(&self, gens: Vec<Polynomial>) -> IdealHandle {
        IdealHandle::new(self.clone(), gens)
    }

    pub fn ideal_from_strs(&self, gens: &[&str]) -> Result<IdealHandle> {
        let gens = gens.iter().map(|s| self.parse_poly(s)).collect::<Result<Vec<_>>>()?;
        Ok(self.ideal(gens))
    }

    /// The maximal ideal at the origin.
    pub fn maximal_ideal(&self) -> IdealHandle {
        self.ideal((0..self.nvars()).map(|i| self.var(i)).collect())
    }

    pub fn unit_ideal(&self) -> IdealHandle {
        self.ideal(vec![self.one()])
    }

    pub(crate) fn cached_powers(&self, key: &GroebnerBasis) -> Vec<GroebnerBasis> {
        self.inner
            .powers
            .lock()
            .unwrap()
            .get(key)
            .cloned()
            .unwrap_or_default()
    }

    pub(crate) fn store_power(&self, key: &GroebnerBasis, k: usize, gb: GroebnerBasis) {
        let mut memo = self.inner.powers.lock().unwrap();
        let list = memo.entry(key.clone()).or_default();
        if list.len() + 1 == k {
            list.push(gb);
        }
    }

    pub(crate) fn dimension_cell(&self) -> &OnceLock<usize> {
        &self.inner.dimension
    }
}
