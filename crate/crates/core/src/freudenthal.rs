//! Freudenthal's recursion for weight multiplicities, used as an oracle
//! that is independent of the alternating-sum character computation.
//!
//! All inner products are taken in the doubled lattice (every vector
//! scaled by 2) so that the Weyl vector rho stays integral; the standard
//! dot product is Weyl-invariant for every supported family.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::char_ring::LaurentPoly;
use crate::error::{Error, Result};
use crate::root_system::{pairing, RootSystem, Weight};

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn doubled_shift(x: &[i64], two_rho: &[i64]) -> Vec<i64> {
    x.iter().zip(two_rho).map(|(&a, &r)| 2 * a + r).collect()
}

/// All dominant weights mu <= x: mu = x - sum c_i alpha_i with c_i >= 0.
fn dominant_below(rs: &RootSystem, x: &Weight) -> Vec<Weight> {
    let simple: Vec<&[i64]> = rs.simple_roots().iter().map(|r| r.0.as_slice()).collect();
    if simple.is_empty() {
        return vec![x.clone()];
    }
    // <alpha_i, h> = 2 for every simple root, so the coefficient sum is
    // bounded by half the height of x.
    let budget = pairing(&x.0, &rs.coroot_sum().0) / 2;
    let mut out = Vec::new();
    let mut current = x.0.clone();
    fn rec(
        rs: &RootSystem,
        simple: &[&[i64]],
        idx: usize,
        budget: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Weight>,
    ) {
        if idx == simple.len() {
            let w = Weight(current.clone());
            if rs.is_dominant(&w).unwrap_or(false) {
                out.push(w);
            }
            return;
        }
        for c in 0..=budget {
            if c > 0 {
                for (v, a) in current.iter_mut().zip(simple[idx]) {
                    *v -= a;
                }
            }
            rec(rs, simple, idx + 1, budget - c, current, out);
        }
        for (v, a) in current.iter_mut().zip(simple[idx]) {
            *v += budget * a;
        }
    }
    rec(rs, &simple, 0, budget, &mut current, &mut out);
    out
}

/// Dominant weight multiplicities of the irreducible with highest
/// weight `x`, by Freudenthal's recursion.
pub fn dominant_multiplicities(
    rs: &RootSystem,
    x: &Weight,
) -> Result<BTreeMap<Weight, BigInt>> {
    if !rs.is_dominant(x)? {
        return Err(Error::NotDominant);
    }
    let two_rho = rs.two_rho();
    let top = doubled_shift(&x.0, two_rho);
    let top_norm = dot(&top, &top);
    let x2: Vec<i64> = x.0.iter().map(|&a| 2 * a).collect();
    let x2_norm = dot(&x2, &x2);

    // process candidates from the top of the dominance order down
    let mut candidates = dominant_below(rs, x);
    candidates.sort_by_key(|m| {
        core::cmp::Reverse((pairing(&m.0, &rs.coroot_sum().0), m.0.clone()))
    });

    let mut mults: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for mu in candidates {
        if mu == *x {
            mults.insert(mu, BigInt::one());
            continue;
        }
        let shifted = doubled_shift(&mu.0, two_rho);
        let denom = top_norm - dot(&shifted, &shifted);
        if denom <= 0 {
            return Err(Error::Internal(
                "non-positive Freudenthal denominator below the highest weight".into(),
            ));
        }
        let mut rhs = BigInt::zero();
        for root in rs.positive_roots() {
            let alpha2: Vec<i64> = root.0.iter().map(|&a| 2 * a).collect();
            let mut k = 1i64;
            loop {
                let nu: Vec<i64> = mu
                    .0
                    .iter()
                    .zip(&root.0)
                    .map(|(&m, &a)| m + k * a)
                    .collect();
                let nu2: Vec<i64> = nu.iter().map(|&a| 2 * a).collect();
                let slope = dot(&nu2, &alpha2);
                if dot(&nu2, &nu2) > x2_norm {
                    if slope > 0 {
                        // the norm only grows from here on; no weight of
                        // E_x lies strictly outside the |x|-ball
                        break;
                    }
                    k += 1;
                    continue;
                }
                let dom = Weight(rs.dominant_conjugate(&nu));
                if let Some(m) = mults.get(&dom) {
                    rhs += m * BigInt::from(slope);
                }
                k += 1;
            }
        }
        rhs *= BigInt::from(2);
        let (q, r) = num_integer::Integer::div_rem(&rhs, &BigInt::from(denom));
        if !r.is_zero() || q.is_negative() {
            return Err(Error::Internal("non-integral Freudenthal multiplicity".into()));
        }
        if !q.is_zero() {
            mults.insert(mu, q);
        }
    }
    Ok(mults)
}

/// Full character from the dominant multiplicities by spreading each one
/// over its Weyl orbit.
pub fn character(rs: &RootSystem, x: &Weight) -> Result<LaurentPoly> {
    let mults = dominant_multiplicities(rs, x)?;
    let mut out = LaurentPoly::zero();
    for (mu, m) in &mults {
        let mut orbit: Vec<Vec<i64>> = rs.weyl().iter().map(|w| w.apply(&mu.0)).collect();
        orbit.sort();
        orbit.dedup();
        for v in orbit {
            out.add_term(v, m.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::char_ring::weyl_character;
    use crate::root_system::CartanType;

    fn rs(ty: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(ty).unwrap()).unwrap()
    }

    #[test]
    fn a1_string() {
        let sp2 = rs("C1");
        let m = dominant_multiplicities(&sp2, &Weight(vec![4])).unwrap();
        assert_eq!(m.len(), 3);
        for k in [0i64, 2, 4] {
            assert_eq!(m[&Weight(vec![k])], BigInt::one());
        }
    }

    #[test]
    fn c2_adjoint() {
        let c2 = rs("C2");
        // adjoint representation 2*omega_1: dimension 10, zero weight
        // multiplicity = rank
        let m = dominant_multiplicities(&c2, &Weight(vec![2, 0])).unwrap();
        assert_eq!(m[&Weight(vec![0, 0])], BigInt::from(2));
        assert_eq!(m[&Weight(vec![2, 0])], BigInt::one());
        assert_eq!(m[&Weight(vec![1, 1])], BigInt::one());
    }

    #[test]
    fn agrees_with_weyl_character() {
        for (ty, weights) in [
            ("C2", vec![vec![2, 1], vec![3, 0], vec![2, 2]]),
            ("C3", vec![vec![1, 1, 0], vec![2, 1, 1]]),
            ("A2gl", vec![vec![2, 1, 0], vec![3, 1, -1]]),
        ] {
            let sys = rs(ty);
            for w in weights {
                let x = Weight(w);
                assert_eq!(
                    character(&sys, &x).unwrap(),
                    weyl_character(&sys, &x).unwrap(),
                    "{ty} {x:?}"
                );
            }
        }
    }
}
