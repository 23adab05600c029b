use std::collections::BTreeMap;

use serde::Serialize;

use super::document::RingDocument;
use crate::error::{Error, Result};
use crate::poly::Field;

/// Parameters `(m, d, c)` of the example family, `m ≥ 0`, `1 ≤ c ≤ d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub m: usize,
    pub d: usize,
    pub c: usize,
}

impl FamilySpec {
    pub fn new(m: usize, d: usize, c: Option<usize>) -> Result<Self> {
        let c = c.unwrap_or(d);
        if d < 1 || c < 1 || c > d {
            return Err(Error::Input(format!("family needs d >= c >= 1, got d = {d}, c = {c}")));
        }
        Ok(FamilySpec { m, d, c })
    }
}

/// Builds the ring with
/// `𝔞 = (x_j, y)·(x_j, y, v_i) + (v_i v_j | i ≠ j) + (v_i^3 - z_i y)`,
/// `I = 𝔪`, `Q = (z_1, ..., z_c, w_1, ..., w_(d-c))`.
pub fn build_family(spec: FamilySpec, field: Field) -> RingDocument {
    let FamilySpec { m, d, c } = spec;
    let xs: Vec<String> = (1..=m).map(|j| format!("x{j}")).collect();
    let vs: Vec<String> = (1..=c).map(|i| format!("v{i}")).collect();
    let zs: Vec<String> = (1..=c).map(|i| format!("z{i}")).collect();
    let ws: Vec<String> = (1..=d - c).map(|i| format!("w{i}")).collect();

    let mut left = xs.clone();
    left.push("y".into());
    let mut right = left.clone();
    right.extend(vs.iter().cloned());

    let mut variables = left.clone();
    variables.extend(vs.iter().cloned());
    variables.extend(zs.iter().cloned());
    variables.extend(ws.iter().cloned());
    let pos = |s: &String| variables.iter().position(|v| v == s).unwrap();

    let mut relations = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for a in &left {
        for b in &right {
            let (p, q) = if pos(a) <= pos(b) { (a, b) } else { (b, a) };
            if seen.insert((p.clone(), q.clone())) {
                relations.push(if p == q { format!("{p}^2") } else { format!("{p}*{q}") });
            }
        }
    }
    for i in 0..c {
        for j in i + 1..c {
            relations.push(format!("{}*{}", vs[i], vs[j]));
        }
    }
    for i in 0..c {
        relations.push(format!("{}^3 - {}*y", vs[i], zs[i]));
    }

    let mut q = zs.clone();
    q.extend(ws.iter().cloned());
    let mut ideals = BTreeMap::new();
    ideals.insert("I".to_string(), variables.clone());
    ideals.insert("Q".to_string(), q);
    RingDocument {
        field: field.descriptor(),
        variables,
        relations,
        ideals,
    }
}
