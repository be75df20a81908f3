//! Restriction of exterior powers to the product of Sp_2 blocks via the
//! generating-series product, and symmetric-function conversions in the
//! v- and b-variables.
//!
//! In the block variables the total exterior-power series of the
//! standard representation restricts to prod_i (1 + v_i t + t^2), where
//! v_i is the class of the i-th block's standard representation; the
//! shifted variables b_i = v_i - Hm generate the augmentation ideal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gw_coeff::{GWCoeff, PlusPart};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarTag {
    /// v_i = class of the i-th standard block representation (sign -1).
    V,
    /// b_i = v_i - Hm (sign -1).
    B,
}

/// Polynomial in v_1..v_n or b_1..b_n over the coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagPoly<P: PlusPart> {
    pub tag: VarTag,
    pub n: usize,
    terms: BTreeMap<Vec<u32>, GWCoeff<P>>,
}

impl<P: PlusPart> DiagPoly<P> {
    pub fn zero(tag: VarTag, n: usize) -> Self {
        DiagPoly { tag, n, terms: BTreeMap::new() }
    }

    pub fn constant(tag: VarTag, n: usize, c: GWCoeff<P>) -> Self {
        let mut p = Self::zero(tag, n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn variable(tag: VarTag, n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        let mut p = Self::zero(tag, n);
        p.add_term(e, GWCoeff::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GWCoeff<P>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> GWCoeff<P> {
        self.terms.get(e).cloned().unwrap_or_else(GWCoeff::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: GWCoeff<P>) {
        use alloc::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.tag, self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.tag != other.tag || self.n != other.n {
            return Err(Error::Mismatch("variable set mismatch".into()));
        }
        Ok(())
    }

    /// Apply a coordinate permutation given as `perm[i] = image of i`.
    fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.tag, self.n);
        for (e, c) in &self.terms {
            let mut p = vec![0u32; self.n];
            for (i, &x) in e.iter().enumerate() {
                p[perm[i]] = x;
            }
            out.add_term(p, c.clone());
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..self.n).collect();
            perm.swap(i, i + 1);
            if &self.permute(&perm) != self {
                return false;
            }
        }
        true
    }
}

impl<P: PlusPart> core::fmt::Display for DiagPoly<P> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let name = match self.tag {
            VarTag::V => "v",
            VarTag::B => "b",
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("{name}{}", i + 1)
                        } else {
                            format!("{name}{}^{}", i + 1, x)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Coefficient of t^k in prod_{i=1}^{n} (1 + v_i t + t^2).
pub fn restrict_lambda<P: PlusPart>(k: usize, n: usize) -> Result<DiagPoly<P>> {
    if k < 1 || k > n {
        return Err(Error::OutOfRange(format!("need 1 <= k <= n, got k={k}, n={n}")));
    }
    if n > 6 {
        return Err(Error::OutOfRange(format!("n={n} exceeds the supported bound 6")));
    }
    Ok(lambda_series::<P>(n).swap_remove(k))
}

/// All 2n+1 t-coefficients of the product series.
fn lambda_series<P: PlusPart>(n: usize) -> Vec<DiagPoly<P>> {
    let mut coeffs: Vec<DiagPoly<P>> = vec![DiagPoly::zero(VarTag::V, n); 2 * n + 1];
    coeffs[0] = DiagPoly::constant(VarTag::V, n, GWCoeff::one());
    for i in 0..n {
        let vi = DiagPoly::variable(VarTag::V, n, i);
        // multiply by (1 + v_i t + t^2)
        for d in (0..=2 * n).rev() {
            let mut acc = coeffs[d].clone();
            if d >= 1 {
                acc = acc.add(&coeffs[d - 1].mul(&vi).unwrap()).unwrap();
            }
            if d >= 2 {
                acc = acc.add(&coeffs[d - 2]).unwrap();
            }
            coeffs[d] = acc;
        }
    }
    coeffs
}

/// Polynomial in the elementary symmetric functions s_1..s_n of the
/// tagged variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElemSymPoly<P: PlusPart> {
    pub tag: VarTag,
    pub n: usize,
    terms: BTreeMap<Vec<u32>, GWCoeff<P>>,
}

impl<P: PlusPart> ElemSymPoly<P> {
    pub fn zero(tag: VarTag, n: usize) -> Self {
        ElemSymPoly { tag, n, terms: BTreeMap::new() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GWCoeff<P>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> GWCoeff<P> {
        self.terms.get(e).cloned().unwrap_or_else(GWCoeff::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: GWCoeff<P>) {
        use alloc::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Expand back into the underlying variables.
    pub fn expand(&self) -> DiagPoly<P> {
        let mut out = DiagPoly::zero(self.tag, self.n);
        for (e, c) in &self.terms {
            let mut mono = DiagPoly::constant(self.tag, self.n, c.clone());
            for (j, &power) in e.iter().enumerate() {
                let s = elementary_symmetric(self.tag, self.n, j + 1);
                for _ in 0..power {
                    mono = mono.mul(&s).unwrap();
                }
            }
            for (me, mc) in mono.terms {
                out.add_term(me, mc);
            }
        }
        out
    }
}

impl<P: PlusPart> core::fmt::Display for ElemSymPoly<P> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| {
                        if x == 1 {
                            format!("s{}", j + 1)
                        } else {
                            format!("s{}^{}", j + 1, x)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The j-th elementary symmetric polynomial in n variables.
pub fn elementary_symmetric<P: PlusPart>(tag: VarTag, n: usize, j: usize) -> DiagPoly<P> {
    let mut out = DiagPoly::zero(tag, n);
    // iterate over all j-subsets of 0..n
    let mut subset: Vec<usize> = (0..j).collect();
    loop {
        let mut e = vec![0u32; n];
        for &i in &subset {
            e[i] = 1;
        }
        out.add_term(e, GWCoeff::one());
        // next combination
        let mut i = j;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if subset[i] != i + n - j {
                subset[i] += 1;
                for k in i + 1..j {
                    subset[k] = subset[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Graded-lex leading exponent: maximal total degree, then lex.
fn graded_lex_leading<P: PlusPart>(p: &DiagPoly<P>) -> Option<Vec<u32>> {
    p.terms()
        .map(|(e, _)| e)
        .max_by_key(|e| (e.iter().sum::<u32>(), (*e).clone()))
        .cloned()
}

/// Express a symmetric polynomial in the elementary symmetric basis by
/// classical leading-monomial subtraction.
pub fn to_elementary_symmetric<P: PlusPart>(p: &DiagPoly<P>) -> Result<ElemSymPoly<P>> {
    if !p.is_symmetric() {
        return Err(Error::Mismatch("polynomial is not symmetric".into()));
    }
    let mut rem = p.clone();
    let mut out = ElemSymPoly::zero(p.tag, p.n);
    while let Some(lead) = graded_lex_leading(&rem) {
        // the leading exponent of a symmetric polynomial is weakly
        // decreasing; successive differences give the sigma-exponents
        if lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Internal(
                "leading exponent of symmetric polynomial is not a partition".into(),
            ));
        }
        let c = rem.coeff(&lead);
        let mut sig = vec![0u32; p.n];
        for j in 0..p.n {
            let next = if j + 1 < p.n { lead[j + 1] } else { 0 };
            sig[j] = lead[j] - next;
        }
        let mut mono = ElemSymPoly::zero(p.tag, p.n);
        mono.add_term(sig, c);
        let expanded = mono.expand();
        for (e, k) in expanded.terms() {
            rem.add_term(e.clone(), k.neg());
        }
        for (e, k) in mono.terms {
            out.add_term(e, k);
        }
    }
    Ok(out)
}

/// Is restrict_lambda(k, n) equal to s_k plus a polynomial in s_j with
/// j < k only?
pub fn verify_triangularity<P: PlusPart>(k: usize, n: usize) -> Result<bool> {
    let sym = to_elementary_symmetric(&restrict_lambda::<P>(k, n)?)?;
    let mut ek = vec![0u32; n];
    ek[k - 1] = 1;
    if sym.coeff(&ek) != GWCoeff::one() {
        return Ok(false);
    }
    for (e, _) in sym.terms() {
        if e == &ek {
            continue;
        }
        if e[k - 1..].iter().any(|&x| x != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Substitute v_i = b_i + Hm.
pub fn v_to_b<P: PlusPart>(p: &DiagPoly<P>) -> Result<DiagPoly<P>> {
    if p.tag != VarTag::V {
        return Err(Error::Mismatch("expected v-variables".into()));
    }
    substitute_shift(p, VarTag::B, &GWCoeff::hyperbolic_minus())
}

/// Substitute b_i = v_i - Hm.
pub fn b_to_v<P: PlusPart>(p: &DiagPoly<P>) -> Result<DiagPoly<P>> {
    if p.tag != VarTag::B {
        return Err(Error::Mismatch("expected b-variables".into()));
    }
    substitute_shift(p, VarTag::V, &GWCoeff::hyperbolic_minus().neg())
}

/// Substitute x_i = y_i + shift for every variable.
fn substitute_shift<P: PlusPart>(
    p: &DiagPoly<P>,
    out_tag: VarTag,
    shift: &GWCoeff<P>,
) -> Result<DiagPoly<P>> {
    let n = p.n;
    let mut out = DiagPoly::zero(out_tag, n);
    for (e, c) in p.terms() {
        let mut mono = DiagPoly::constant(out_tag, n, c.clone());
        for (i, &power) in e.iter().enumerate() {
            let mut factor = DiagPoly::variable(out_tag, n, i);
            factor.add_term(vec![0; n], shift.clone());
            for _ in 0..power {
                mono = mono.mul(&factor)?;
            }
        }
        for (me, mc) in mono.terms {
            out.add_term(me, mc);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gw_coeff::Split;
    use num_bigint::BigInt;

    type C = GWCoeff<Split>;
    type D = DiagPoly<Split>;

    #[test]
    fn sigma_one() {
        let p: D = restrict_lambda(1, 3).unwrap();
        assert_eq!(p.coeff(&[1, 0, 0]), C::one());
        assert_eq!(p.coeff(&[0, 1, 0]), C::one());
        assert_eq!(p.coeff(&[0, 0, 1]), C::one());
        assert_eq!(p.terms().count(), 3);
    }

    #[test]
    fn k_out_of_range() {
        assert!(restrict_lambda::<Split>(2, 1).is_err());
        assert!(restrict_lambda::<Split>(0, 2).is_err());
    }

    #[test]
    fn n1_full_series() {
        let s = lambda_series::<Split>(1);
        assert_eq!(s[0], D::constant(VarTag::V, 1, C::one()));
        assert_eq!(s[1], D::variable(VarTag::V, 1, 0));
        assert_eq!(s[2], D::constant(VarTag::V, 1, C::one()));
    }

    #[test]
    fn lambda_2_2() {
        let p: D = restrict_lambda(2, 2).unwrap();
        // v1 v2 + 2
        assert_eq!(p.coeff(&[1, 1]), C::one());
        assert_eq!(p.coeff(&[0, 0]), C::from_int(2));
        assert_eq!(p.terms().count(), 2);
        let sym = to_elementary_symmetric(&p).unwrap();
        assert_eq!(sym.coeff(&[0, 1]), C::one());
        assert_eq!(sym.coeff(&[0, 0]), C::from_int(2));
    }

    #[test]
    fn lambda_3_3_in_sigma() {
        let p: D = restrict_lambda(3, 3).unwrap();
        let sym = to_elementary_symmetric(&p).unwrap();
        // s3 + 2 s1
        assert_eq!(sym.coeff(&[0, 0, 1]), C::one());
        assert_eq!(sym.coeff(&[1, 0, 0]), C::from_int(2));
        assert_eq!(sym.terms().count(), 2);
    }

    #[test]
    fn symmetric_and_roundtrip() {
        for n in 1..=4usize {
            for k in 1..=n {
                let p: D = restrict_lambda(k, n).unwrap();
                assert!(p.is_symmetric(), "k={k} n={n}");
                let sym = to_elementary_symmetric(&p).unwrap();
                assert_eq!(sym.expand(), p, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn triangularity_all() {
        for n in 1..=4usize {
            for k in 1..=n {
                assert!(verify_triangularity::<Split>(k, n).unwrap(), "k={k} n={n}");
            }
        }
        assert!(verify_triangularity::<crate::gw_coeff::Real>(3, 4).unwrap());
    }

    #[test]
    fn shift_roundtrip() {
        let p: D = restrict_lambda(2, 3).unwrap();
        let q = v_to_b(&p).unwrap();
        assert_eq!(b_to_v(&q).unwrap(), p);
    }

    #[test]
    fn b_constant_term_is_augmentation() {
        // constant term of the b-image of restrict_lambda(2,2) is the
        // coefficient of t^2 in (1 + Hm t + t^2)^2 = 2 + Hm^2 = 2 + 2Hp
        let p: D = restrict_lambda(2, 2).unwrap();
        let q = v_to_b(&p).unwrap();
        let expected = C::from_int(2).add(&C::hyperbolic_minus().mul(&C::hyperbolic_minus()));
        assert_eq!(q.coeff(&[0, 0]), expected);
        assert_eq!(q.coeff(&[0, 0]).rank(), BigInt::from(6));
    }

    #[test]
    fn non_symmetric_rejected() {
        let p: D = DiagPoly::variable(VarTag::V, 2, 0);
        assert!(to_elementary_symmetric(&p).is_err());
    }
}
