use serde::Serialize;

use crate::error::Result;
use crate::hilbert::{binom, coefficients_from_numerator, hilbert_data, HilbertData};
use crate::ideals::{ideal_equal, IdealHandle};
use crate::poly::Field;

use super::table::{sally_table, SallyTable};

/// Which closed form the Hilbert function of `I` is expected to follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `e_1 = e_0 - ℓ(A/I)`
    #[serde(rename = "northcott-equality")]
    NorthcottEquality,
    /// `e_1 = e_0 - ℓ(A/I) + 1`
    #[serde(rename = "huneke-plus-one")]
    HunekePlusOne,
    /// `e_1 = e_0 - ℓ(A/I) + ℓ(I^2/QI)`
    #[serde(rename = "elias-valla-equality")]
    EliasVallaEquality,
    /// `e_1 = e_0 - ℓ(A/I) + ℓ(I^2/QI) + 1`: `C` is an ideal of `B` generated by `c` linear forms
    #[serde(rename = "sally-rank-one")]
    SallyRankOne,
    #[serde(rename = "unclassified")]
    Unclassified,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::NorthcottEquality => "northcott-equality",
            Branch::HunekePlusOne => "huneke-plus-one",
            Branch::EliasVallaEquality => "elias-valla-equality",
            Branch::SallyRankOne => "sally-rank-one",
            Branch::Unclassified => "unclassified",
        }
    }

    /// Whether the closed form relies on `I` being integrally closed.
    pub fn needs_integral_closure(self) -> bool {
        !matches!(
            self,
            Branch::NorthcottEquality | Branch::EliasVallaEquality | Branch::Unclassified
        )
    }
}

/// Sharper closed form available inside the rank-one branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Refinement {
    /// `e_1 = e_0 - ℓ(A/I) + 2` and `I^3 ≠ QI^2`
    #[serde(rename = "e1-excess-two")]
    ExcessTwo,
    /// `e_1 = e_0 - ℓ(A/I) + 3` and `ℓ(I^2/QI) = 2`
    #[serde(rename = "e1-excess-three")]
    ExcessThree,
}

impl Refinement {
    pub fn name(self) -> &'static str {
        match self {
            Refinement::ExcessTwo => "e1-excess-two",
            Refinement::ExcessThree => "e1-excess-three",
        }
    }
}

/// Position of `c = ℓ(I^3/QI^2)` relative to `d` in the rank-one case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RankOneCase {
    /// `c = 1 < d`
    #[serde(rename = "c=1<d")]
    One,
    /// `2 ≤ c < d`
    #[serde(rename = "2<=c<d")]
    Middle,
    /// `c = d`
    #[serde(rename = "c=d")]
    Full,
    /// `c = 0` or `c > d`, inconsistent with the rank-one structure
    #[serde(rename = "out-of-range")]
    OutOfRange,
}

impl RankOneCase {
    pub fn of(c: u64, d: usize) -> Self {
        let c = c as usize;
        match c {
            0 => RankOneCase::OutOfRange,
            _ if c > d => RankOneCase::OutOfRange,
            _ if c == d => RankOneCase::Full,
            1 => RankOneCase::One,
            _ => RankOneCase::Middle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegralClosure {
    NotRequired,
    /// `I` is the maximal ideal
    Automatic,
    HypothesisAssumed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub branch: Branch,
    pub case: Option<RankOneCase>,
    pub refinement: Option<Refinement>,
    /// series numerator of the refinement, compared like the main prediction
    pub refinement_numerator: Option<Vec<i64>>,
    pub dimension: usize,
    pub colength: u64,
    /// `e_0 - ℓ(A/I)`
    pub e0_minus_colength: i64,
    /// `ℓ(I^2/QI)`
    pub lambda: u64,
    pub c: u64,
    pub computed_coefficients: Vec<i64>,
    pub computed_numerator: Vec<i64>,
    pub predicted_coefficients: Vec<i64>,
    pub predicted_numerator: Vec<i64>,
    /// per-case closed forms of the `e_i`, rank-one branches only
    pub case_coefficients: Option<Vec<i64>>,
    /// `I^4 = QI^3`, rank-one branches only
    pub i4_eq_qi3: Option<bool>,
    /// computed `ℓ(C_n)` against the closed form for `2 ≤ n ≤ n_max`, rank-one branches only
    pub c_lengths_match: Option<bool>,
    pub integral_closure: IntegralClosure,
    #[serde(rename = "match")]
    pub matches: bool,
    pub warnings: Vec<String>,
}

fn trim(mut h: Vec<i64>) -> Vec<i64> {
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    h
}

fn add(h: &mut Vec<i64>, k: usize, v: i64) {
    if h.len() <= k {
        h.resize(k + 1, 0);
    }
    h[k] += v;
}

/// `ℓ + (e_0-ℓ-λ-1) z + (λ+1) z^2 + z (1-z)^(c+1)`
pub fn rank_one_numerator(colength: u64, e0: i64, lambda: u64, c: u64) -> Vec<i64> {
    let (l, lam) = (colength as i64, lambda as i64);
    let mut h = vec![l, e0 - l - lam - 1, lam + 1];
    for j in 0..=c as i64 + 1 {
        let s = if j % 2 == 0 { 1 } else { -1 };
        add(&mut h, j as usize + 1, s * binom(c as i64 + 1, j));
    }
    trim(h)
}

/// `ℓ(C_n)` when `C` is generated by `c` independent linear forms of a
/// polynomial ring in `d` variables, shifted by one.
pub fn rank_one_c_length(n: usize, d: usize, c: usize) -> i64 {
    if n < 2 {
        return 0;
    }
    let (n, d, c) = (n as i64, d as i64, c as i64);
    binom(n + d - 1, d - 1) - binom(n + d - 2, d - 2) - binom(n + d - c - 1, d - c - 1)
        + binom(n + d - c - 2, d - c - 2)
}

/// Closed forms for `e_0..e_d` in the rank-one case, with `e_0`, `e_1` taken as computed.
pub fn rank_one_coefficients(e0: i64, e1: i64, colength: u64, c: u64, d: usize) -> Option<Vec<i64>> {
    let l = colength as i64;
    let mut e = vec![0; d + 1];
    e[0] = e0;
    if d >= 1 {
        e[1] = e1;
    }
    match RankOneCase::of(c, d) {
        RankOneCase::OutOfRange => return None,
        RankOneCase::One => {
            e[2] = e1 - e0 + l + 1;
            if d >= 3 {
                e[3] = 1;
            }
        }
        RankOneCase::Middle => {
            e[2] = e1 - e0 + l;
            let s = if c % 2 == 1 { 1 } else { -1 };
            for i in [c as usize + 1, c as usize + 2] {
                if (3..=d).contains(&i) {
                    e[i] = s;
                }
            }
        }
        RankOneCase::Full => {
            if d >= 2 {
                e[2] = e1 - e0 + l;
            }
        }
    }
    Some(e)
}

/// Computes the Sally table and Hilbert data and classifies the pair.
pub fn classify(i: &IdealHandle, q: &IdealHandle, n_max: usize) -> Result<ClassificationReport> {
    let table = sally_table(i, q, n_max)?;
    let data = hilbert_data(i, n_max)?;
    classify_with(i, &table, &data)
}

/// Branch assignment from already computed data.
pub fn classify_with(i: &IdealHandle, table: &SallyTable, data: &HilbertData) -> Result<ClassificationReport> {
    let d = data.dimension;
    let l = table.colength;
    let lam = table.lambda();
    let c = table.c;
    let (e0, e1) = (data.e(0), data.e(1));
    let excess = e1 - (e0 - l as i64);
    let li = l as i64;
    let lam_i = lam as i64;

    let branch = if table.reduction_number == 0 || excess == 0 {
        Branch::NorthcottEquality
    } else if excess == 1 {
        Branch::HunekePlusOne
    } else if excess == lam_i {
        Branch::EliasVallaEquality
    } else if excess == lam_i + 1 {
        Branch::SallyRankOne
    } else {
        Branch::Unclassified
    };

    let predicted_numerator = trim(match branch {
        Branch::NorthcottEquality => vec![li, e0 - li],
        Branch::HunekePlusOne => vec![li, e0 - li - 1, 1],
        Branch::EliasVallaEquality => vec![li, e0 - li - lam_i, lam_i],
        Branch::SallyRankOne => rank_one_numerator(l, e0, lam, c),
        Branch::Unclassified => data.numerator.clone(),
    });
    let predicted_coefficients = coefficients_from_numerator(&predicted_numerator, d)?;
    let computed_numerator = trim(data.numerator.clone());
    let computed_coefficients = data.coefficients.clone();

    let rank_one = branch == Branch::SallyRankOne;
    let refinement = match excess {
        2 if rank_one && !table.flags.i3_eq_qi2 => Some(Refinement::ExcessTwo),
        3 if rank_one && lam == 2 && d >= 2 => Some(Refinement::ExcessThree),
        _ => None,
    };
    let refinement_numerator = refinement.map(|r| {
        trim(match r {
            Refinement::ExcessTwo => vec![li, e0 - li - 1, 0, 1],
            Refinement::ExcessThree if c == 1 => vec![li, e0 - li - 2, 1, 1],
            Refinement::ExcessThree => vec![li, e0 - li - 2, 0, 3, -1],
        })
    });
    let case = rank_one.then(|| RankOneCase::of(c, d));
    let case_coefficients = if rank_one {
        rank_one_coefficients(e0, e1, l, c, d)
    } else {
        None
    };
    let c_lengths_match = rank_one.then(|| {
        (2..=table.n_max).all(|n| table.c_at(n) as i64 == rank_one_c_length(n, d, c as usize))
    });

    let mut matches = branch != Branch::Unclassified
        && predicted_numerator == computed_numerator
        && predicted_coefficients == computed_coefficients;
    matches &= match branch {
        Branch::NorthcottEquality => table.flags.i2_eq_qi,
        Branch::HunekePlusOne | Branch::EliasVallaEquality => table.flags.i3_eq_qi2,
        _ => true,
    };
    if rank_one {
        matches &= case != Some(RankOneCase::OutOfRange)
            && table.flags.i4_eq_qi3
            && case_coefficients.as_ref() == Some(&computed_coefficients)
            && c_lengths_match == Some(true);
    }
    if let Some(h) = &refinement_numerator {
        matches &= *h == computed_numerator;
    }

    let integral_closure = if !branch.needs_integral_closure() {
        IntegralClosure::NotRequired
    } else if ideal_equal(i, &i.ring().maximal_ideal())? {
        IntegralClosure::Automatic
    } else {
        IntegralClosure::HypothesisAssumed
    };

    let mut warnings = Vec::new();
    if integral_closure == IntegralClosure::HypothesisAssumed {
        warnings.push("closed form assumes I is integrally closed; this is not verified".to_string());
    }
    if let Field::Prime(p) = i.ring().field() {
        warnings.push(format!(
            "computed over GF({p}); values may differ from characteristic zero"
        ));
    }
    if !table.flags.q_cap_i2_eq_qi {
        warnings.push("Q ∩ I^2 ≠ QI".to_string());
    }

    Ok(ClassificationReport {
        branch,
        case,
        refinement,
        refinement_numerator,
        dimension: d,
        colength: l,
        e0_minus_colength: e0 - li,
        lambda: lam,
        c,
        computed_coefficients,
        computed_numerator,
        predicted_coefficients,
        predicted_numerator,
        case_coefficients,
        i4_eq_qi3: rank_one.then_some(table.flags.i4_eq_qi3),
        c_lengths_match,
        integral_closure,
        matches,
        warnings,
    })
}

/// First index where the decomposition of `ℓ(A/I^(n+1))` fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionFailure {
    pub n: usize,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub q_cap_i2_eq_qi: bool,
    pub holds: bool,
    pub first_failure: Option<DecompositionFailure>,
    pub checked_up_to: usize,
}

/// `e_0 C(n+d,d) - (e_0-ℓ+λ) C(n+d-1,d-1) + λ C(n+d-2,d-2) - ℓ(C_n)`.
///
/// The `λ` binomial is taken as `C(n+d-1,d-1) - C(n+d-2,d-1)`, which agrees
/// with `C(n+d-2,d-2)` except at `d = 1, n = 0`, where `C(-1,-1)` would be 0.
pub fn decomposition_rhs(e0: i64, colength: u64, lambda: u64, c_n: u64, d: usize, n: usize) -> i64 {
    let (n, d) = (n as i64, d as i64);
    let (l, lam) = (colength as i64, lambda as i64);
    let pascal = binom(n + d - 1, d - 1) - binom(n + d - 2, d - 1);
    e0 * binom(n + d, d) - (e0 - l + lam) * binom(n + d - 1, d - 1) + lam * pascal - c_n as i64
}

/// Checks `ℓ(A/I^(n+1))` against the decomposition for `0 ≤ n ≤ n_max`.
pub fn decomposition_check(i: &IdealHandle, q: &IdealHandle, n_max: usize) -> Result<DecompositionReport> {
    let table = sally_table(i, q, n_max)?;
    let data = hilbert_data(i, n_max)?;
    Ok(decomposition_with(&table, &data, n_max))
}

pub fn decomposition_with(table: &SallyTable, data: &HilbertData, n_max: usize) -> DecompositionReport {
    let n_max = n_max.min(table.n_max).min(data.values.len() - 1);
    let mut report = DecompositionReport {
        q_cap_i2_eq_qi: table.flags.q_cap_i2_eq_qi,
        holds: false,
        first_failure: None,
        checked_up_to: n_max,
    };
    if !report.q_cap_i2_eq_qi {
        return report;
    }
    for n in 0..=n_max {
        let lhs = data.values[n] as i64;
        let rhs = decomposition_rhs(data.e(0), table.colength, table.lambda(), table.c_at(n), data.dimension, n);
        if lhs != rhs {
            report.first_failure = Some(DecompositionFailure { n, lhs, rhs });
            return report;
        }
    }
    report.holds = true;
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E1Report {
    /// `e_1 - (e_0 - ℓ(A/I) + ℓ(I^2/QI))`
    pub gap: i64,
    pub gap_nonnegative: bool,
    pub i3_eq_qi2: bool,
    /// `gap = 0` exactly when `I^3 = QI^2`
    pub gap_zero_iff_i3_eq_qi2: bool,
    /// `ℓ(I^2/QI) = e_0 + (d-1) ℓ(A/I) - ℓ(I/I^2)`
    pub lambda_identity: bool,
    pub lambda: u64,
    pub lambda_from_invariants: i64,
}

impl E1Report {
    pub fn holds(&self) -> bool {
        self.gap_nonnegative && self.gap_zero_iff_i3_eq_qi2 && self.lambda_identity
    }
}

pub fn e1_formula_check(i: &IdealHandle, q: &IdealHandle) -> Result<E1Report> {
    let table = sally_table(i, q, 3)?;
    let data = hilbert_data(i, 3)?;
    Ok(e1_formula_with(&table, &data))
}

pub fn e1_formula_with(table: &SallyTable, data: &HilbertData) -> E1Report {
    let l = table.colength as i64;
    let lam = table.lambda();
    let gap = data.e(1) - (data.e(0) - l + lam as i64);
    let i_mod_i2 = data.values[1] as i64 - data.values[0] as i64;
    let lambda_from_invariants = data.e(0) + (data.dimension as i64 - 1) * l - i_mod_i2;
    E1Report {
        gap,
        gap_nonnegative: gap >= 0,
        i3_eq_qi2: table.flags.i3_eq_qi2,
        gap_zero_iff_i3_eq_qi2: (gap == 0) == table.flags.i3_eq_qi2,
        lambda_identity: lambda_from_invariants == lam as i64,
        lambda: lam,
        lambda_from_invariants,
    }
}
