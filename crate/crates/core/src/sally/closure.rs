use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{
    artinian_length, ideal_colon, ideal_contains, ideal_equal, ideal_intersect, IdealHandle,
    RingPresentation,
};

pub const DEFAULT_RR_CAP: usize = 8;

/// Stabilized value of `I^(n+1) : I^n`, reached when two consecutive
/// colons agree. Each colon must contain the previous one.
pub fn ratliff_rush(i: &IdealHandle, cap: usize) -> Result<IdealHandle> {
    let mut prev = ideal_colon(&i.power(2)?, i)?;
    for n in 2..=cap {
        let next = ideal_colon(&i.power(n + 1)?, &i.power(n)?)?;
        if !ideal_contains(&next, &prev)? {
            return Err(Error::Precondition(format!(
                "colon chain is not ascending at n = {n}"
            )));
        }
        if ideal_equal(&next, &prev)? {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::NoStabilization { cap })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthProbe {
    pub positive_depth: bool,
    /// first `n` with `I^(n+1) : I ≠ I^n`
    pub first_gap: Option<usize>,
    pub vv_depth_lower_bound: usize,
    pub certified_up_to: usize,
}

/// Bounded depth certificates for the associated graded ring.
///
/// `I^(n+1) : I` lies in the Ratliff-Rush closure of `I^n`, and equality for
/// every `n` is equivalent to all powers being closed, so a single strict
/// inclusion proves `depth G = 0`. The Valabrega-Valla bound is the largest
/// `s` with `(a_1..a_s) ∩ I^n = (a_1..a_s) I^(n-1)` for `2 ≤ n ≤ n_max`.
pub fn depth_probe(i: &IdealHandle, q: &IdealHandle, n_max: usize) -> Result<DepthProbe> {
    i.ring().same_ring(q.ring())?;
    let mut first_gap = None;
    for n in 1..=n_max {
        let colon = ideal_colon(&i.power(n + 1)?, i)?;
        if !ideal_equal(&colon, &i.power(n)?)? {
            first_gap = Some(n);
            break;
        }
    }
    let gens = q.nonzero_gens()?;
    let ring = i.ring();
    let mut bound = 0;
    'outer: for s in 1..=gens.len() {
        let part = ring.ideal(gens[..s].to_vec());
        for n in 2..=n_max {
            let lhs = ideal_intersect(&part, &i.power(n)?)?;
            let rhs = part.product(&i.power(n - 1)?)?;
            if !ideal_equal(&lhs, &rhs)? {
                break 'outer;
            }
        }
        bound = s;
    }
    Ok(DepthProbe {
        positive_depth: first_gap.is_none(),
        first_gap,
        vv_depth_lower_bound: bound,
        certified_up_to: n_max,
    })
}

type Rule = Arc<dyn Fn(usize) -> Result<IdealHandle> + Send + Sync>;

/// A filtration `n ↦ K_n` given by a rule.
#[derive(Clone)]
pub struct FiltrationHandle {
    name: String,
    ring: RingPresentation,
    rule: Rule,
}

impl fmt::Debug for FiltrationHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiltrationHandle").field("name", &self.name).finish()
    }
}

/// Result of [`FiltrationHandle::spot_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationCheck {
    pub starts_at_unit: bool,
    pub descending: bool,
    pub multiplicative: bool,
    pub checked_up_to: usize,
}

impl FiltrationCheck {
    pub fn holds(&self) -> bool {
        self.starts_at_unit && self.descending && self.multiplicative
    }
}

impl FiltrationHandle {
    pub fn new<F>(name: &str, ring: &RingPresentation, rule: F) -> Self
    where
        F: Fn(usize) -> Result<IdealHandle> + Send + Sync + 'static,
    {
        FiltrationHandle {
            name: name.to_string(),
            ring: ring.clone(),
            rule: Arc::new(rule),
        }
    }

    /// `K_n = I^n`.
    pub fn adic(i: &IdealHandle) -> Self {
        let i = i.clone();
        FiltrationHandle::new("adic", &i.ring().clone(), move |n| i.power(n))
    }

    /// `K_n` = Ratliff-Rush closure of `I^n`, with `K_0 = A`.
    pub fn ratliff_rush(i: &IdealHandle, cap: usize) -> Self {
        let i = i.clone();
        FiltrationHandle::new("ratliff-rush", &i.ring().clone(), move |n| {
            if n == 0 {
                Ok(i.ring().unit_ideal())
            } else {
                ratliff_rush(&i.power(n)?, cap)
            }
        })
    }

    /// `K_0 = A`, `K_1 = 𝔪`, `K_n = 𝔪^n + y 𝔪^(n-2)` for the variable `y`.
    pub fn shifted(ring: &RingPresentation, y: &str) -> Result<Self> {
        let idx = ring
            .names()
            .iter()
            .position(|v| v == y)
            .ok_or_else(|| Error::Input(format!("no variable named `{y}`")))?;
        let yid = ring.ideal(vec![ring.var(idx)]);
        let m = ring.maximal_ideal();
        Ok(FiltrationHandle::new("shifted", ring, move |n| match n {
            0 => Ok(m.ring().unit_ideal()),
            1 => Ok(m.clone()),
            _ => m.power(n)?.sum(&yid.product(&m.power(n - 2)?)?),
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub fn term(&self, n: usize) -> Result<IdealHandle> {
        (self.rule)(n)
    }

    /// `ℓ(A/K_(n+1))` for `n = 0..=n_max`.
    pub fn colengths(&self, n_max: usize) -> Result<Vec<u64>> {
        (1..=n_max + 1).map(|n| Ok(artinian_length(&self.term(n)?)?.value)).collect()
    }

    /// Checks `K_0 = A`, `K_n ⊇ K_(n+1)` and `K_a K_b ⊆ K_(a+b)` for indices up to `n_max`.
    pub fn spot_check(&self, n_max: usize) -> Result<FiltrationCheck> {
        let terms = (0..=n_max).map(|n| self.term(n)).collect::<Result<Vec<_>>>()?;
        let starts_at_unit = terms[0].is_unit()?;
        let mut descending = true;
        for w in terms.windows(2) {
            descending &= ideal_contains(&w[0], &w[1])?;
        }
        let mut multiplicative = true;
        for a in 1..=n_max {
            for b in a..=n_max - a {
                multiplicative &= ideal_contains(&terms[a + b], &terms[a].product(&terms[b])?)?;
            }
        }
        Ok(FiltrationCheck {
            starts_at_unit,
            descending,
            multiplicative,
            checked_up_to: n_max,
        })
    }
}
