use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[u16; 16]>;

/// Dense exponent vector with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u16) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m.degree = exp as u32;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), o.nvars());
        Monomial {
            exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + o.degree,
        }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.degree <= o.degree && self.exps.iter().zip(&o.exps).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming `self | o`.
    pub fn quotient_of(&self, o: &Monomial) -> Monomial {
        debug_assert!(self.divides(o));
        Monomial {
            exps: o.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: o.degree - self.degree,
        }
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&o.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(&o.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Short divisibility signature: `a | b` implies `mask(a) & !mask(b) == 0`.
    pub(crate) fn mask(&self) -> u64 {
        let n = self.exps.len().max(1);
        let bits = (64 / n).clamp(1, 4);
        let mut m = 0u64;
        for (i, &e) in self.exps.iter().enumerate().take(64) {
            for k in 0..bits.min(e as usize) {
                let bit = i * bits + k;
                if bit < 64 {
                    m |= 1 << bit;
                }
            }
        }
        m
    }

    pub(crate) fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, self.exps.len());
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub(crate) fn with_extra_var(&self, front: bool, exp: u16) -> Monomial {
        let mut exps: Exponents = SmallVec::with_capacity(self.exps.len() + 1);
        if front {
            exps.push(exp);
            exps.extend_from_slice(&self.exps);
        } else {
            exps.extend_from_slice(&self.exps);
            exps.push(exp);
        }
        Monomial {
            exps,
            degree: self.degree + exp as u32,
        }
    }

    pub(crate) fn drop_front(&self, k: usize) -> Monomial {
        Monomial::from_exponents(&self.exps[k..])
    }

    pub fn format(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_mask() {
        let a = Monomial::from_exponents(&[1, 0, 2]);
        let b = Monomial::from_exponents(&[2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.mask() & !b.mask(), 0);
        assert_eq!(a.quotient_of(&b), Monomial::from_exponents(&[1, 1, 0]));
        assert_eq!(a.lcm(&Monomial::from_exponents(&[0, 3, 1])).exponents(), &[1, 3, 2]);
        assert_eq!(b.degree(), 5);
    }

    #[test]
    fn mask_never_rejects_a_divisor() {
        let nv = 20;
        for i in 0..nv {
            for e in 0..6u16 {
                let a = Monomial::var(nv, i, e);
                let b = Monomial::var(nv, i, e + 1).mul(&Monomial::var(nv, (i + 3) % nv, 2));
                assert!(a.divides(&b));
                assert_eq!(a.mask() & !b.mask(), 0);
            }
        }
    }
}
