//! Laurent polynomials on the character lattice and exact character
//! computations: the Weyl character formula, decomposition into
//! irreducibles, tensor products and exterior powers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{
    pairing, vec_add, vec_sub, RootSystem, Weight, WeylElement,
};

/// Element of Z[X*]: a finite integer-coefficient sum of monomials
/// t^mu = t_1^{mu_1} ... t_r^{mu_r}.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], BigInt::one())
    }

    pub fn monomial(exp: Vec<i64>, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: Vec<i64>, coeff: BigInt) {
        use alloc::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> LaurentPoly {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * k))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(vec_add(e1, e2), c1 * c2);
            }
        }
        out
    }

    /// Apply a Weyl element (or any lattice matrix) to every exponent.
    pub fn weyl_act(&self, w: &WeylElement) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (w.apply(e), c.clone()))
                .collect(),
        }
    }

    /// Evaluate at t_i = 1 for all i: the total coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Halve every exponent; requires all exponents even.
    fn halved(&self) -> Result<LaurentPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.iter().any(|x| x % 2 != 0) {
                return Err(Error::Internal("odd exponent when halving".into()));
            }
            terms.insert(e.iter().map(|&x| x / 2).collect(), c.clone());
        }
        Ok(LaurentPoly { terms })
    }

    /// Lexicographically maximal exponent.
    fn lex_leading(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        let (lead_exp, lead_coeff) = other.lex_leading()?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some((rexp, rcoeff)) = rem.lex_leading() {
            let (q, r) = num_integer::Integer::div_rem(rcoeff, lead_coeff);
            if !r.is_zero() {
                return None;
            }
            let qexp = vec_sub(rexp, lead_exp);
            let factor = LaurentPoly::monomial(qexp.clone(), q.clone());
            rem = rem.sub(&factor.mul(other));
            quot.add_term(qexp, q);
        }
        Some(quot)
    }
}

impl core::fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.iter().all(|&x| x == 0) {
                write!(f, "{c}")?;
                continue;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            let mut printed = false;
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                printed = true;
                if x == 1 {
                    write!(f, "t{}", i + 1)?;
                } else {
                    write!(f, "t{}^{}", i + 1, x)?;
                }
            }
        }
        Ok(())
    }
}

/// Virtual sum of irreducibles: a finite Z-linear combination of dominant
/// highest weights.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct K0Class {
    mults: BTreeMap<Weight, BigInt>,
}

impl K0Class {
    pub fn zero() -> Self {
        K0Class { mults: BTreeMap::new() }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::of_weight(Weight::zero(rank))
    }

    pub fn of_weight(x: Weight) -> Self {
        let mut mults = BTreeMap::new();
        mults.insert(x, BigInt::one());
        K0Class { mults }
    }

    pub fn is_zero(&self) -> bool {
        self.mults.is_empty()
    }

    pub fn mults(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.mults.iter()
    }

    pub fn mult(&self, x: &Weight) -> BigInt {
        self.mults.get(x).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_mult(&mut self, x: Weight, m: BigInt) {
        if m.is_zero() {
            return;
        }
        let entry = self.mults.entry(x.clone()).or_insert_with(BigInt::zero);
        *entry += m;
        if entry.is_zero() {
            self.mults.remove(&x);
        }
    }

    pub fn add(&self, other: &K0Class) -> K0Class {
        let mut out = self.clone();
        for (x, m) in &other.mults {
            out.add_mult(x.clone(), m.clone());
        }
        out
    }

    pub fn all_nonneg(&self) -> bool {
        self.mults.values().all(|m| !m.is_negative())
    }

    /// Character of the class: sum of irreducible characters.
    pub fn character(&self, rs: &RootSystem) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        for (x, m) in &self.mults {
            out = out.add(&weyl_character(rs, x)?.scale(m));
        }
        Ok(out)
    }
}

impl core::fmt::Display for K0Class {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, m) in self.mults.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "E_[{x}]")?;
            } else {
                write!(f, "{m}*E_[{x}]")?;
            }
        }
        Ok(())
    }
}

/// Alternating orbit sum over the Weyl group, in doubled exponents:
/// sum_w det(w) t^{2 w(v)} for an already-doubled strictly dominant v.
fn alternating_sum(rs: &RootSystem, doubled_v: &[i64]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for w in rs.weyl() {
        out.add_term(w.apply(doubled_v), BigInt::from(w.det));
    }
    out
}

/// Irreducible character by Weyl's formula. Computed in the doubled
/// lattice so that the half-sum of positive roots stays integral for
/// every supported family, then halved back.
pub fn weyl_character(rs: &RootSystem, x: &Weight) -> Result<LaurentPoly> {
    if !rs.is_dominant(x)? {
        return Err(Error::NotDominant);
    }
    if rs.weyl_order() == 1 {
        return Ok(LaurentPoly::monomial(x.0.clone(), BigInt::one()));
    }
    let two_rho = rs.two_rho();
    let doubled_top: Vec<i64> = x
        .0
        .iter()
        .zip(two_rho)
        .map(|(&a, &r)| 2 * a + r)
        .collect();
    let numerator = alternating_sum(rs, &doubled_top);
    let denominator = alternating_sum(rs, two_rho);
    let quotient = numerator
        .div_exact(&denominator)
        .ok_or_else(|| Error::Internal("Weyl quotient is not exact".into()))?;
    quotient.halved()
}

/// Dimension of the irreducible with highest weight `x`, by the Weyl
/// dimension formula (exact rational product).
pub fn weyl_dimension(rs: &RootSystem, x: &Weight) -> Result<BigInt> {
    if !rs.is_dominant(x)? {
        return Err(Error::NotDominant);
    }
    let two_rho = rs.two_rho();
    let top: Vec<i64> = x
        .0
        .iter()
        .zip(two_rho)
        .map(|(&a, &r)| 2 * a + r)
        .collect();
    let mut dim = BigRational::one();
    for coroot in rs.positive_coroots() {
        let num = pairing(&top, &coroot.0);
        let den = pairing(two_rho, &coroot.0);
        dim *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    crate::linalg::as_integer(&dim)
        .ok_or_else(|| Error::Internal("non-integral Weyl dimension".into()))
}

/// Key for the fixed total refinement of the dominance order:
/// (pairing with the sum of positive coroots, lexicographic).
fn height_lex_key(rs: &RootSystem, e: &[i64]) -> (i64, Vec<i64>) {
    (pairing(e, &rs.coroot_sum().0), e.to_vec())
}

fn leading_exponent(rs: &RootSystem, p: &LaurentPoly) -> Option<Vec<i64>> {
    p.terms()
        .map(|(e, _)| e)
        .max_by_key(|e| height_lex_key(rs, e))
        .cloned()
}

pub fn is_weyl_invariant(rs: &RootSystem, p: &LaurentPoly) -> bool {
    rs.weyl().iter().all(|w| &p.weyl_act(w) == p)
}

/// Write a W-invariant Laurent polynomial as a Z-combination of
/// irreducible characters, by leading-term subtraction along the fixed
/// total refinement of dominance.
pub fn decompose_character(rs: &RootSystem, p: &LaurentPoly) -> Result<K0Class> {
    if let Some((e, _)) = p.terms().next() {
        if e.len() != rs.lattice_rank() {
            return Err(Error::RankMismatch {
                expected: rs.lattice_rank(),
                got: e.len(),
            });
        }
    }
    if !is_weyl_invariant(rs, p) {
        return Err(Error::NotACharacter);
    }
    let mut rem = p.clone();
    let mut out = K0Class::zero();
    let mut last_key: Option<(i64, Vec<i64>)> = None;
    while let Some(e) = leading_exponent(rs, &rem) {
        let key = height_lex_key(rs, &e);
        if let Some(prev) = &last_key {
            if key >= *prev {
                return Err(Error::Internal(
                    "leading term failed to decrease during decomposition".into(),
                ));
            }
        }
        last_key = Some(key);
        let x = Weight(e.clone());
        if !rs.is_dominant(&x)? {
            return Err(Error::NotACharacter);
        }
        let c = rem.coeff(&e);
        rem = rem.sub(&weyl_character(rs, &x)?.scale(&c));
        out.add_mult(x, c);
    }
    Ok(out)
}

/// Weight multiplicities of the irreducible `x` as a list, largest first
/// in the (height, lex) order.
fn weight_multiset(rs: &RootSystem, x: &Weight) -> Result<Vec<(Vec<i64>, BigInt)>> {
    let ch = weyl_character(rs, x)?;
    let mut weights: Vec<(Vec<i64>, BigInt)> =
        ch.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    weights.sort_by_key(|(e, _)| core::cmp::Reverse(height_lex_key(rs, e)));
    Ok(weights)
}

/// Product of two irreducibles in the irreducible basis, by the
/// weight-multiplicity shifting formula: each weight mu of E_x
/// contributes det(w)·E_z where w makes mu + y + rho strictly dominant
/// (conjugates on a wall contribute nothing).
pub fn tensor_decompose(rs: &RootSystem, x: &Weight, y: &Weight) -> Result<K0Class> {
    if !rs.is_dominant(x)? || !rs.is_dominant(y)? {
        return Err(Error::NotDominant);
    }
    // iterate over the weights of the smaller factor
    let (small, big) = if weyl_dimension(rs, x)? <= weyl_dimension(rs, y)? {
        (x, y)
    } else {
        (y, x)
    };
    let two_rho = rs.two_rho();
    let mut out = K0Class::zero();
    for (mu, m) in weight_multiset(rs, small)? {
        // doubled mu + y + rho
        let shifted: Vec<i64> = mu
            .iter()
            .zip(&big.0)
            .zip(two_rho)
            .map(|((&a, &b), &r)| 2 * a + 2 * b + r)
            .collect();
        let (dom, sign) = rs.dominant_conjugate_signed(&shifted);
        if sign == 0 {
            continue;
        }
        let z: Vec<i64> = dom
            .iter()
            .zip(two_rho)
            .map(|(&d, &r)| {
                debug_assert_eq!((d - r) % 2, 0);
                (d - r) / 2
            })
            .collect();
        out.add_mult(Weight(z), m * BigInt::from(sign));
    }
    if !out.all_nonneg() {
        return Err(Error::Internal("negative tensor multiplicity".into()));
    }
    Ok(out)
}

/// Product of two K0 classes, bilinear in both arguments.
pub fn k0_mul(rs: &RootSystem, a: &K0Class, b: &K0Class) -> Result<K0Class> {
    let mut out = K0Class::zero();
    for (x, m) in a.mults() {
        for (y, n) in b.mults() {
            let prod = tensor_decompose(rs, x, y)?;
            for (z, k) in prod.mults() {
                out.add_mult(z.clone(), m * n * k);
            }
        }
    }
    Ok(out)
}

/// Character of the k-th exterior power of the (actual) representation
/// `v`: the k-th elementary symmetric polynomial of its weight multiset.
pub fn lambda_character(rs: &RootSystem, v: &K0Class, k: usize) -> Result<K0Class> {
    if !v.all_nonneg() {
        return Err(Error::NotARepresentation);
    }
    let rank = rs.lattice_rank();
    if k == 0 {
        return Ok(K0Class::trivial(rank));
    }
    // elementary symmetric e_k of the multiset of weights: build the
    // truncated generating product prod_mu (1 + t e^mu)^{m_mu}
    let mut coeffs: Vec<LaurentPoly> = vec![LaurentPoly::zero(); k + 1];
    coeffs[0] = LaurentPoly::one(rank);
    for (x, m) in v.mults() {
        let ch = weyl_character(rs, x)?;
        for (mu, mult) in ch.terms() {
            let m_total = m * mult;
            let mut times = BigInt::zero();
            while &times < &m_total {
                // multiply by (1 + t e^mu), truncated at degree k
                for d in (1..=k).rev() {
                    let shifted = coeffs[d - 1].mul(&LaurentPoly::monomial(
                        mu.clone(),
                        BigInt::one(),
                    ));
                    coeffs[d] = coeffs[d].add(&shifted);
                }
                times += 1;
            }
        }
    }
    decompose_character(rs, &coeffs[k])
}

/// Pretty weight string used across serializers.
pub fn weight_string(x: &Weight) -> String {
    format!("{x}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::CartanType;

    fn rs(ty: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(ty).unwrap()).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight(coords.to_vec())
    }

    #[test]
    fn laurent_basic_laws() {
        let t = LaurentPoly::monomial(vec![1], BigInt::one());
        let tinv = LaurentPoly::monomial(vec![-1], BigInt::one());
        let sum = t.add(&tinv);
        assert_eq!(sum.mul(&LaurentPoly::one(1)), sum);
        assert_eq!(t.mul(&tinv), LaurentPoly::one(1));
    }

    #[test]
    fn reflection_negates_a1_weight() {
        let sp2 = rs("C1");
        let t = LaurentPoly::monomial(vec![1], BigInt::one());
        let refl = sp2
            .weyl()
            .iter()
            .find(|e| e.det == -1)
            .unwrap()
            .clone();
        assert_eq!(t.weyl_act(&refl), LaurentPoly::monomial(vec![-1], BigInt::one()));
    }

    #[test]
    fn character_a1_standard() {
        let sp2 = rs("C1");
        let ch = weyl_character(&sp2, &w(&[1])).unwrap();
        let expected = LaurentPoly::monomial(vec![1], BigInt::one())
            .add(&LaurentPoly::monomial(vec![-1], BigInt::one()));
        assert_eq!(ch, expected);
        assert_eq!(weyl_character(&sp2, &w(&[0])).unwrap(), LaurentPoly::one(1));
    }

    #[test]
    fn character_c2_omega2() {
        let c2 = rs("C2");
        let ch = weyl_character(&c2, &w(&[1, 1])).unwrap();
        assert_eq!(ch.eval_at_one(), BigInt::from(5));
        assert_eq!(ch.coeff(&[1, 1]), BigInt::one());
        assert_eq!(ch.coeff(&[1, -1]), BigInt::one());
        assert_eq!(ch.coeff(&[-1, 1]), BigInt::one());
        assert_eq!(ch.coeff(&[-1, -1]), BigInt::one());
        assert_eq!(ch.coeff(&[0, 0]), BigInt::one());
    }

    #[test]
    fn dims() {
        for n in 1..=4usize {
            let cn = rs(&format!("C{n}"));
            let o1 = cn.fundamental_weights()[0].clone();
            assert_eq!(weyl_dimension(&cn, &o1).unwrap(), BigInt::from(2 * n));
        }
        let c3 = rs("C3");
        assert_eq!(
            weyl_dimension(&c3, &w(&[1, 1, 0])).unwrap(),
            BigInt::from(14)
        );
        assert_eq!(weyl_dimension(&c3, &w(&[0, 0, 0])).unwrap(), BigInt::one());
    }

    #[test]
    fn char_dim_agree() {
        let c3 = rs("C3");
        for x in [[1, 0, 0], [1, 1, 0], [1, 1, 1], [2, 1, 0]] {
            let x = w(&x);
            let ch = weyl_character(&c3, &x).unwrap();
            assert_eq!(ch.eval_at_one(), weyl_dimension(&c3, &x).unwrap());
        }
    }

    #[test]
    fn decompose_examples() {
        let sp2 = rs("C1");
        assert_eq!(
            decompose_character(&sp2, &LaurentPoly::one(1)).unwrap(),
            K0Class::trivial(1)
        );
        // ch(E_1)^2 = ch(E_2) + ch(E_0)
        let ch1 = weyl_character(&sp2, &w(&[1])).unwrap();
        let d = decompose_character(&sp2, &ch1.mul(&ch1)).unwrap();
        assert_eq!(d.mult(&w(&[2])), BigInt::one());
        assert_eq!(d.mult(&w(&[0])), BigInt::one());
        assert_eq!(d.mults().count(), 2);
        // weights of the C_2 standard representation
        let c2 = rs("C2");
        let p = LaurentPoly::monomial(vec![1, 0], BigInt::one())
            .add(&LaurentPoly::monomial(vec![-1, 0], BigInt::one()))
            .add(&LaurentPoly::monomial(vec![0, 1], BigInt::one()))
            .add(&LaurentPoly::monomial(vec![0, -1], BigInt::one()));
        assert_eq!(decompose_character(&c2, &p).unwrap(), K0Class::of_weight(w(&[1, 0])));
    }

    #[test]
    fn decompose_rejects_non_invariant() {
        let sp2 = rs("C1");
        let p = LaurentPoly::monomial(vec![1], BigInt::one());
        assert_eq!(decompose_character(&sp2, &p), Err(Error::NotACharacter));
    }

    #[test]
    fn torus_decomposition_is_termwise() {
        let t2 = rs("T2");
        let p = LaurentPoly::monomial(vec![1, -3], BigInt::from(2))
            .add(&LaurentPoly::monomial(vec![0, 5], BigInt::from(-1)));
        let d = decompose_character(&t2, &p).unwrap();
        assert_eq!(d.mult(&w(&[1, -3])), BigInt::from(2));
        assert_eq!(d.mult(&w(&[0, 5])), BigInt::from(-1));
    }

    #[test]
    fn tensor_clebsch_gordan() {
        let sp2 = rs("C1");
        let d = tensor_decompose(&sp2, &w(&[1]), &w(&[1])).unwrap();
        assert_eq!(d.mult(&w(&[2])), BigInt::one());
        assert_eq!(d.mult(&w(&[0])), BigInt::one());
        assert_eq!(d.mults().count(), 2);
        // against the general a (x) b = (+) |a-b|..a+b step 2
        for a in 0..=6i64 {
            for b in 0..=6i64 {
                let d = tensor_decompose(&sp2, &w(&[a]), &w(&[b])).unwrap();
                let lo = (a - b).abs();
                let expected: Vec<i64> = (0..).map(|i| lo + 2 * i).take_while(|&c| c <= a + b).collect();
                assert_eq!(d.mults().count(), expected.len());
                for c in expected {
                    assert_eq!(d.mult(&w(&[c])), BigInt::one(), "a={a} b={b} c={c}");
                }
            }
        }
    }

    #[test]
    fn tensor_with_trivial() {
        let c2 = rs("C2");
        let x = w(&[2, 1]);
        assert_eq!(
            tensor_decompose(&c2, &x, &w(&[0, 0])).unwrap(),
            K0Class::of_weight(x.clone())
        );
    }

    #[test]
    fn tensor_c2_standard_squared() {
        let c2 = rs("C2");
        let o1 = w(&[1, 0]);
        let d = tensor_decompose(&c2, &o1, &o1).unwrap();
        assert_eq!(d.mult(&w(&[2, 0])), BigInt::one());
        assert_eq!(d.mult(&w(&[1, 1])), BigInt::one());
        assert_eq!(d.mult(&w(&[0, 0])), BigInt::one());
        assert_eq!(d.mults().count(), 3);
        // dims: 16 = 10 + 5 + 1
        assert_eq!(weyl_dimension(&c2, &w(&[2, 0])).unwrap(), BigInt::from(10));
        assert_eq!(weyl_dimension(&c2, &w(&[1, 1])).unwrap(), BigInt::from(5));
    }

    #[test]
    fn tensor_matches_char_multiplication() {
        // dual-route check on a couple of C_2 and GL_3 cases
        for (ty, x, y) in [
            ("C2", vec![1, 0], vec![1, 1]),
            ("C2", vec![2, 0], vec![1, 0]),
            ("A2gl", vec![1, 0, 0], vec![1, 1, 0]),
            ("A2gl", vec![2, 1, -1], vec![1, 0, 0]),
        ] {
            let sys = rs(ty);
            let x = w(&x);
            let y = w(&y);
            let fast = tensor_decompose(&sys, &x, &y).unwrap();
            let chx = weyl_character(&sys, &x).unwrap();
            let chy = weyl_character(&sys, &y).unwrap();
            let slow = decompose_character(&sys, &chx.mul(&chy)).unwrap();
            assert_eq!(fast, slow, "{ty}");
        }
    }

    #[test]
    fn tensor_total_dimension() {
        let c3 = rs("C3");
        let x = w(&[1, 1, 0]);
        let y = w(&[1, 0, 0]);
        let d = tensor_decompose(&c3, &x, &y).unwrap();
        let total: BigInt = d
            .mults()
            .map(|(z, m)| m * weyl_dimension(&c3, z).unwrap())
            .sum();
        assert_eq!(
            total,
            weyl_dimension(&c3, &x).unwrap() * weyl_dimension(&c3, &y).unwrap()
        );
    }

    #[test]
    fn lambda_examples() {
        let sp2 = rs("C1");
        let v = K0Class::of_weight(w(&[1]));
        assert_eq!(lambda_character(&sp2, &v, 2).unwrap(), K0Class::trivial(1));
        assert_eq!(lambda_character(&sp2, &v, 0).unwrap(), K0Class::trivial(1));
        assert!(lambda_character(&sp2, &v, 3).unwrap().is_zero());

        let c2 = rs("C2");
        let v = K0Class::of_weight(w(&[1, 0]));
        let l2 = lambda_character(&c2, &v, 2).unwrap();
        assert_eq!(l2.mult(&w(&[1, 1])), BigInt::one());
        assert_eq!(l2.mult(&w(&[0, 0])), BigInt::one());
        assert_eq!(l2.mults().count(), 2);

        let c3 = rs("C3");
        let v = K0Class::of_weight(w(&[1, 0, 0]));
        let l3 = lambda_character(&c3, &v, 3).unwrap();
        assert_eq!(l3.mult(&w(&[1, 1, 1])), BigInt::one());
        assert_eq!(l3.mult(&w(&[1, 0, 0])), BigInt::one());
        assert_eq!(l3.mults().count(), 2);
        // dims 20 = 14 + 6
        assert_eq!(weyl_dimension(&c3, &w(&[1, 1, 1])).unwrap(), BigInt::from(14));
    }

    #[test]
    fn lambda_rejects_virtual() {
        let sp2 = rs("C1");
        let mut v = K0Class::zero();
        v.add_mult(w(&[1]), BigInt::from(-1));
        assert_eq!(lambda_character(&sp2, &v, 1), Err(Error::NotARepresentation));
    }

    #[test]
    fn lambda_t_multiplicative() {
        // lambda^k(a+b) = sum_{i+j=k} lambda^i(a) * lambda^j(b), k <= 3
        let c2 = rs("C2");
        let a = K0Class::of_weight(w(&[1, 0]));
        let b = K0Class::of_weight(w(&[1, 1]));
        let sum = a.add(&b);
        for k in 0..=3usize {
            let lhs = lambda_character(&c2, &sum, k).unwrap();
            let mut rhs = K0Class::zero();
            for i in 0..=k {
                let la = lambda_character(&c2, &a, i).unwrap();
                let lb = lambda_character(&c2, &b, k - i).unwrap();
                rhs = rhs.add(&k0_mul(&c2, &la, &lb).unwrap());
            }
            assert_eq!(lhs, rhs, "k={k}");
        }
    }
}
