//! Symbolic verification of the unimodular-row lifting identity: with
//! sum_i a_i b_i = 1 + g*r, the shifted row b_i' = b_i - g*r*b_i
//! together with c = d = r satisfies sum_i a_i b_i' + g^2 c d = 1.
//!
//! Algebraically this is the exact factorization
//! P = (1 - g*r) * Q with P = sum_i a_i b_i' + g^2 r^2 - 1 and
//! Q = sum_i a_i b_i - 1 - g*r.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer polynomial in the variables a_0..a_n, b_0..b_n, g, r.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![0; n_vars], BigInt::from(c));
        p
    }

    pub fn variable(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        let mut p = Self::zero();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        use alloc::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

/// Variable layout for n+1 row entries: a_0..a_n, b_0..b_n, g, r.
struct Vars {
    n_vars: usize,
    n: usize,
}

impl Vars {
    fn new(n: usize) -> Self {
        Vars { n_vars: 2 * (n + 1) + 2, n }
    }
    fn a(&self, i: usize) -> MultiPoly {
        MultiPoly::variable(self.n_vars, i)
    }
    fn b(&self, i: usize) -> MultiPoly {
        MultiPoly::variable(self.n_vars, self.n + 1 + i)
    }
    fn g(&self) -> MultiPoly {
        MultiPoly::variable(self.n_vars, 2 * (self.n + 1))
    }
    fn r(&self) -> MultiPoly {
        MultiPoly::variable(self.n_vars, 2 * (self.n + 1) + 1)
    }
}

/// Check the lifting identity for a row of length n+1 by exact
/// polynomial arithmetic.
pub fn verify_lift_identity(n: usize) -> bool {
    let v = Vars::new(n);
    let gr = v.g().mul(&v.r());
    let one = MultiPoly::constant(v.n_vars, 1);

    // Q = sum a_i b_i - 1 - g r (the defining relation, set to zero)
    let mut dot = MultiPoly::zero();
    for i in 0..=n {
        dot = dot.add(&v.a(i).mul(&v.b(i)));
    }
    let q = dot.sub(&one).sub(&gr);

    // P = sum a_i (b_i - g r b_i) + g^2 r^2 - 1
    let mut p = MultiPoly::zero();
    for i in 0..=n {
        let shifted = v.b(i).sub(&gr.mul(&v.b(i)));
        p = p.add(&v.a(i).mul(&shifted));
    }
    p = p.add(&gr.mul(&gr)).sub(&one);

    // the identity holds on the vanishing locus of Q exactly when
    // P = (1 - g r) * Q
    p.sub(&one.sub(&gr).mul(&q)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rows() {
        assert!(verify_lift_identity(0));
        assert!(verify_lift_identity(1));
        assert!(verify_lift_identity(5));
    }

    #[test]
    fn all_up_to_eight() {
        for n in 0..=8 {
            assert!(verify_lift_identity(n), "n={n}");
        }
    }

    #[test]
    fn degenerate_g_zero() {
        // with g = 0 the identity collapses to sum a_i b_i = 1; check
        // by substituting g = 0 into P - (1-gr)Q, i.e. P itself equals
        // dot - 1 there, which is Q at g = 0
        let v = Vars::new(2);
        let one = MultiPoly::constant(v.n_vars, 1);
        let mut dot = MultiPoly::zero();
        for i in 0..=2 {
            dot = dot.add(&v.a(i).mul(&v.b(i)));
        }
        let q_at_g0 = dot.sub(&one);
        // P at g = 0: sum a_i b_i - 1
        let mut p = MultiPoly::zero();
        for i in 0..=2 {
            p = p.add(&v.a(i).mul(&v.b(i)));
        }
        p = p.sub(&one);
        assert_eq!(p, q_at_g0);
    }
}
