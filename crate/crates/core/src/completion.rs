//! Weighted-degree truncated power series over the graded coefficient
//! ring, augmentation-ideal completions at finite precision, finite
//! nilpotent stages, and the symmetrization map sending the k-th Borel
//! generator to the k-th elementary symmetric polynomial.
//!
//! Truncation is by weighted total degree: the k-th sigma-variable
//! carries weight k (its leading exterior power has that filtration
//! degree) while y- and b-variables carry weight 1. The weighted-degree
//! filtration and the ideal-adic one are cofinal, which makes every
//! finite-precision claim assertable by exact linear algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gw_coeff::{GWCoeff, PlusPart};
use crate::gw_ring::GWPoly;
use crate::linalg;

/// Power series truncated at weighted total degree `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries<P: PlusPart> {
    /// Degree weight of each variable.
    pub weights: Vec<u32>,
    pub cap: u32,
    terms: BTreeMap<Vec<u32>, GWCoeff<P>>,
}

pub fn weighted_degree(weights: &[u32], e: &[u32]) -> u32 {
    weights.iter().zip(e).map(|(w, x)| w * x).sum()
}

impl<P: PlusPart> TruncSeries<P> {
    pub fn zero(weights: Vec<u32>, cap: u32) -> Self {
        TruncSeries { weights, cap, terms: BTreeMap::new() }
    }

    pub fn constant(weights: Vec<u32>, cap: u32, c: GWCoeff<P>) -> Self {
        let n = weights.len();
        let mut s = Self::zero(weights, cap);
        s.add_term(vec![0; n], c);
        s
    }

    pub fn one(weights: Vec<u32>, cap: u32) -> Self {
        Self::constant(weights, cap, GWCoeff::one())
    }

    pub fn variable(weights: Vec<u32>, cap: u32, i: usize) -> Self {
        let n = weights.len();
        let mut e = vec![0; n];
        e[i] = 1;
        let mut s = Self::zero(weights, cap);
        s.add_term(e, GWCoeff::one());
        s
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
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

    /// Terms above the cap are silently discarded: arithmetic is exact
    /// modulo higher degrees.
    pub fn add_term(&mut self, e: Vec<u32>, c: GWCoeff<P>) {
        use alloc::collections::btree_map::Entry;
        if c.is_zero() || weighted_degree(&self.weights, &e) > self.cap {
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
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            weights: self.weights.clone(),
            cap: self.cap,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.weights.clone(), self.cap);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// Substitute variable i by `images[i]`; every image must have zero
    /// constant term so the substitution respects the filtration.
    pub fn substitute(&self, images: &[TruncSeries<P>]) -> Result<TruncSeries<P>> {
        if images.len() != self.n_vars() {
            return Err(Error::Mismatch("wrong number of substitution images".into()));
        }
        let target = images
            .first()
            .cloned()
            .unwrap_or_else(|| Self::zero(self.weights.clone(), self.cap));
        for im in images {
            let n = im.n_vars();
            if !im.coeff(&vec![0; n]).is_zero() {
                return Err(Error::Mismatch(
                    "substitution image has a constant term".into(),
                ));
            }
        }
        let mut out = Self::zero(target.weights.clone(), target.cap);
        for (e, c) in &self.terms {
            let mut mono = Self::constant(target.weights.clone(), target.cap, c.clone());
            for (i, &power) in e.iter().enumerate() {
                for _ in 0..power {
                    mono = mono.mul(&images[i])?;
                }
            }
            for (me, mc) in mono.terms {
                out.add_term(me, mc);
            }
        }
        Ok(out)
    }

    /// The part of weighted degree exactly d.
    pub fn degree_part(&self, d: u32) -> Vec<(Vec<u32>, GWCoeff<P>)> {
        self.terms
            .iter()
            .filter(|(e, _)| weighted_degree(&self.weights, e) == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.weights != other.weights || self.cap != other.cap {
            return Err(Error::Mismatch("series variable set or cap mismatch".into()));
        }
        Ok(())
    }
}

impl<P: PlusPart> core::fmt::Display for TruncSeries<P> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("y{}", i + 1)
                        } else {
                            format!("y{}^{}", i + 1, x)
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

/// Weight vector for the sigma-variables of Sp_{2r}: the k-th Borel
/// generator has filtration weight k.
pub fn sigma_weights(r: usize) -> Vec<u32> {
    (1..=r as u32).collect()
}

/// All exponent vectors with the given weights and weighted degree <= cap.
pub fn monomials_up_to(weights: &[u32], cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; weights.len()];
    fn rec(weights: &[u32], cap: u32, idx: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == weights.len() {
            out.push(current.clone());
            return;
        }
        let mut used: u32 = weights
            .iter()
            .zip(current.iter())
            .take(idx)
            .map(|(w, x)| w * x)
            .sum();
        let mut e = 0u32;
        loop {
            if used > cap {
                break;
            }
            current[idx] = e;
            rec(weights, cap, idx + 1, current, out);
            e += 1;
            used += weights[idx];
        }
        current[idx] = 0;
    }
    rec(weights, cap, 0, &mut current, &mut out);
    out.sort();
    out
}

/// Truncate a polynomial in the Borel sigma-basis into the completed
/// ring at precision D.
pub fn completion_map<P: PlusPart>(p: &GWPoly<P>, cap: u32) -> Result<TruncSeries<P>> {
    let r = p.n_gens();
    let mut out = TruncSeries::zero(sigma_weights(r), cap);
    for (e, c) in p.terms() {
        let eu: Vec<u32> = e
            .iter()
            .map(|&x| {
                u32::try_from(x).map_err(|_| {
                    Error::OutOfRange("negative exponent in completion".into())
                })
            })
            .collect::<Result<_>>()?;
        out.add_term(eu, c.clone());
    }
    Ok(out)
}

/// The k-th elementary symmetric polynomial in r degree-1 variables as
/// a truncated series.
pub fn elementary_symmetric_series<P: PlusPart>(r: usize, cap: u32, k: usize) -> TruncSeries<P> {
    let weights = vec![1u32; r];
    let mut out = TruncSeries::zero(weights, cap);
    let diag = crate::diag_restrict::elementary_symmetric::<P>(
        crate::diag_restrict::VarTag::V,
        r,
        k,
    );
    for (e, c) in diag.terms() {
        out.add_term(e.clone(), c.clone());
    }
    out
}

/// Image of a sigma-basis polynomial under sigma_k -> e_k(y_1..y_r).
pub fn atiyah_segal_map<P: PlusPart>(p: &GWPoly<P>, cap: u32) -> Result<TruncSeries<P>> {
    let r = p.n_gens();
    let images: Vec<TruncSeries<P>> =
        (1..=r).map(|k| elementary_symmetric_series(r, cap, k)).collect();
    let as_series = completion_map(p, cap)?;
    // substitution through the sigma-weighted series respects degrees:
    // e_k is homogeneous of degree k
    let mut out = TruncSeries::zero(vec![1; r], cap);
    for (e, c) in as_series.terms() {
        let mut mono = TruncSeries::constant(vec![1; r], cap, c.clone());
        for (i, &power) in e.iter().enumerate() {
            for _ in 0..power {
                mono = mono.mul(&images[i])?;
            }
        }
        for (me, mc) in mono.terms {
            out.add_term(me, mc);
        }
    }
    Ok(out)
}

/// Number of partitions of `d` into parts of size at most `max_part`.
pub fn partitions_with_parts_at_most(d: u32, max_part: u32) -> usize {
    fn rec(d: u32, max_part: u32) -> usize {
        if d == 0 {
            return 1;
        }
        if max_part == 0 {
            return 0;
        }
        let mut total = 0;
        for first in 1..=max_part.min(d) {
            total += rec(d - first, first);
        }
        total
    }
    rec(d, max_part)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: u32,
    /// Sigma-monomials of this weighted degree.
    pub source_monomials: usize,
    /// Module rank of their images (flattened over the coefficient
    /// basis).
    pub image_rank: usize,
    /// Dimension of the symmetric part of the target in this degree.
    pub invariant_dimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASReport {
    pub r: usize,
    pub cap: u32,
    pub model: &'static str,
    pub rows: Vec<DegreeRow>,
    pub injective: bool,
    pub surjective_onto_invariants: bool,
}

/// Flatten a homogeneous series part into rational coordinates over
/// (monomial) x (coefficient Z-basis).
fn flatten_part<P: PlusPart>(
    part: &[(Vec<u32>, GWCoeff<P>)],
    monomials: &[Vec<u32>],
) -> Vec<BigRational> {
    let b = GWCoeff::<P>::basis_len();
    let mut v = vec![BigRational::zero(); monomials.len() * b];
    for (e, c) in part {
        let idx = monomials.binary_search(e).expect("monomial not enumerated");
        for (j, coord) in c.basis_coords().into_iter().enumerate() {
            v[idx * b + j] = BigRational::from_integer(coord);
        }
    }
    v
}

/// Multiply a series term list by a coefficient basis element: the
/// module generated by an element over the coefficient ring flattens to
/// the span of these integer vectors.
fn coeff_basis_elements<P: PlusPart>() -> Vec<GWCoeff<P>> {
    // Z-basis of the coefficient ring as a module: plus-part basis
    // followed by Hm. For Split this is {1, Hm}; for Real {1, e, Hm}.
    let b = P::basis_len();
    let mut out = Vec::with_capacity(b + 1);
    for j in 0..b {
        // reconstruct the j-th plus basis vector through parse-free
        // arithmetic: 1 and (Hp - 1) span the same module as {1, e}
        let g = if j == 0 {
            GWCoeff::<P>::one()
        } else {
            GWCoeff::hyperbolic_plus().sub(&GWCoeff::one())
        };
        out.push(g);
    }
    out.push(GWCoeff::hyperbolic_minus());
    out
}

/// Per-degree rank/dimension table for the symmetrization map at
/// precision `cap`, with the injectivity and image checks.
pub fn atiyah_segal_report<P: PlusPart>(r: usize, cap: u32) -> Result<ASReport> {
    if r > 4 || cap > 8 {
        return Err(Error::OutOfRange("supported range is r <= 4, precision <= 8".into()));
    }
    let sw = sigma_weights(r);
    let basis = coeff_basis_elements::<P>();
    let mut rows = Vec::new();
    let mut injective = true;
    let mut surjective = true;
    for d in 0..=cap {
        let sources: Vec<Vec<u32>> = monomials_up_to(&sw, d)
            .into_iter()
            .filter(|e| weighted_degree(&sw, e) == d)
            .collect();
        let targets: Vec<Vec<u32>> = monomials_up_to(&vec![1; r], d)
            .into_iter()
            .filter(|e| e.iter().sum::<u32>() == d)
            .collect();
        // flattened matrix: one row per (source monomial, coefficient
        // basis element)
        let mut mat: Vec<Vec<BigRational>> = Vec::new();
        for e in &sources {
            let mut p = GWPoly::<P>::zero(r);
            p.add_term(e.iter().map(|&x| i64::from(x)).collect(), GWCoeff::one());
            let image = atiyah_segal_map(&p, cap)?;
            for g in &basis {
                let scaled: Vec<(Vec<u32>, GWCoeff<P>)> = image
                    .degree_part(d)
                    .into_iter()
                    .map(|(m, c)| (m, c.mul(g)))
                    .collect();
                mat.push(flatten_part(&scaled, &targets));
            }
        }
        let rank = if mat.is_empty() { 0 } else { linalg::rank(&mat) };
        let expected_rank = sources.len() * basis.len();
        if rank != expected_rank {
            injective = false;
        }
        let inv_dim = partitions_with_parts_at_most(d, r as u32);
        // independent cross-check: orbit count of degree-d monomials
        let mut orbits: Vec<Vec<u32>> = targets
            .iter()
            .map(|e| {
                let mut s = e.clone();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        orbits.sort();
        orbits.dedup();
        if orbits.len() != inv_dim {
            return Err(Error::Internal("partition count mismatch".into()));
        }
        if sources.len() != inv_dim {
            surjective = false;
        }
        rows.push(DegreeRow {
            degree: d,
            source_monomials: sources.len(),
            image_rank: rank,
            invariant_dimension: inv_dim,
        });
    }
    Ok(ASReport {
        r,
        cap,
        model: P::MODEL_NAME,
        rows,
        injective,
        surjective_onto_invariants: injective && surjective,
    })
}

/// Constructive check that the graded and ungraded adic topologies
/// agree at precision D: every monomial in the b-variables of total
/// degree >= 2i factors as i positive even-degree monomials times a
/// remainder, and any product of i positive even-degree monomials lies
/// in the i-th power of the augmentation ideal.
pub fn graded_topology_check(r: usize, i: u32, cap: u32) -> Result<bool> {
    if 2 * i > cap {
        return Err(Error::OutOfRange("need 2i <= precision".into()));
    }
    let weights = vec![1u32; r];
    for e in monomials_up_to(&weights, cap) {
        let d: u32 = e.iter().sum();
        if d < 2 * i {
            continue;
        }
        // flatten into letters and take consecutive pairs as the even
        // factors
        let mut letters = Vec::new();
        for (var, &count) in e.iter().enumerate() {
            for _ in 0..count {
                letters.push(var);
            }
        }
        let mut product = vec![0u32; r];
        for pair in 0..i as usize {
            let a = letters[2 * pair];
            let b = letters[2 * pair + 1];
            // each factor b_a * b_b is a plus-part (even) monomial of
            // positive degree
            product[a] += 1;
            product[b] += 1;
        }
        // remainder must have non-negative exponents
        if e.iter().zip(&product).any(|(x, p)| x < p) {
            return Ok(false);
        }
        // second inclusion at this shape: the even part alone has
        // degree 2i >= i, hence lies in the i-th ideal power
        let even_degree: u32 = product.iter().sum();
        if even_degree != 2 * i || even_degree < i {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomials in b_1..b_r modulo (b_1^N, ..., b_r^N).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteStageRing {
    pub r: usize,
    pub nilpotency: u32,
}

/// Element of a finite stage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageElem<P: PlusPart> {
    terms: BTreeMap<Vec<u32>, GWCoeff<P>>,
}

impl FiniteStageRing {
    pub fn new(r: usize, nilpotency: u32) -> Result<Self> {
        if nilpotency == 0 {
            return Err(Error::OutOfRange("nilpotency exponent must be >= 1".into()));
        }
        Ok(FiniteStageRing { r, nilpotency })
    }

    pub fn zero<P: PlusPart>(&self) -> StageElem<P> {
        StageElem { terms: BTreeMap::new() }
    }

    pub fn reduce<P: PlusPart>(&self, terms: impl IntoIterator<Item = (Vec<u32>, GWCoeff<P>)>) -> StageElem<P> {
        let mut out = self.zero();
        for (e, c) in terms {
            if c.is_zero() || e.iter().any(|&x| x >= self.nilpotency) {
                continue;
            }
            use alloc::collections::btree_map::Entry;
            match out.terms.entry(e) {
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
        out
    }

    pub fn add<P: PlusPart>(&self, a: &StageElem<P>, b: &StageElem<P>) -> StageElem<P> {
        self.reduce(
            a.terms
                .iter()
                .chain(b.terms.iter())
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn mul<P: PlusPart>(&self, a: &StageElem<P>, b: &StageElem<P>) -> StageElem<P> {
        let mut terms = Vec::new();
        for (e1, c1) in &a.terms {
            for (e2, c2) in &b.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                terms.push((e, c1.mul(c2)));
            }
        }
        self.reduce(terms)
    }

    /// Ring surjection to a stage with smaller (or equal) nilpotency.
    pub fn transition<P: PlusPart>(&self, target: &FiniteStageRing, a: &StageElem<P>) -> Result<StageElem<P>> {
        if target.r != self.r || target.nilpotency > self.nilpotency {
            return Err(Error::Mismatch("transitions go to smaller stages".into()));
        }
        Ok(target.reduce(a.terms.iter().map(|(e, c)| (e.clone(), c.clone()))))
    }

    /// Monomial basis of the part of total degree <= cap.
    pub fn low_degree_basis(&self, cap: u32) -> Vec<Vec<u32>> {
        monomials_up_to(&vec![1; self.r], cap)
            .into_iter()
            .filter(|e| e.iter().all(|&x| x < self.nilpotency))
            .collect()
    }
}

impl<P: PlusPart> StageElem<P> {
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GWCoeff<P>)> {
        self.terms.iter()
    }

    /// The part of total degree <= cap, as truncated-series terms.
    pub fn truncate(&self, cap: u32) -> TruncSeries<P> {
        let r = self
            .terms
            .keys()
            .next()
            .map(|e| e.len())
            .unwrap_or(0);
        let mut s = TruncSeries::zero(vec![1; r.max(1)], cap);
        for (e, c) in &self.terms {
            s.add_term(e.clone(), c.clone());
        }
        s
    }
}

/// Do the finite stages converge to the truncated power-series ring at
/// precision D, for any strictly increasing nilpotency schedule?
///
/// Verified for the two schedules N(n) = n and N(n) = n + 1 past D: the
/// degree-<=D monomial basis stabilizes to the series basis, the
/// transitions restrict to the identity there, and multiplication
/// agrees with series multiplication.
pub fn limit_consistency<P: PlusPart>(r: usize, cap: u32) -> Result<bool> {
    for offset in 0..2u32 {
        let n1 = cap + 1 + offset;
        let n2 = n1 + 1;
        let stage1 = FiniteStageRing::new(r, n1)?;
        let stage2 = FiniteStageRing::new(r, n2)?;

        // basis of the low-degree part matches the series basis
        let series_basis = monomials_up_to(&vec![1u32; r], cap);
        if stage1.low_degree_basis(cap) != series_basis
            || stage2.low_degree_basis(cap) != series_basis
        {
            return Ok(false);
        }

        // a deterministic test element: s = 1 + sum b_i + Hm * b_1
        let mut terms: Vec<(Vec<u32>, GWCoeff<P>)> = vec![(vec![0; r], GWCoeff::one())];
        for i in 0..r {
            let mut e = vec![0u32; r];
            e[i] = 1;
            terms.push((e, GWCoeff::one()));
        }
        let mut e1 = vec![0u32; r];
        e1[0] = 1;
        terms.push((e1, GWCoeff::hyperbolic_minus()));

        let a2 = stage2.reduce(terms.clone());
        // power that overflows the cap but not the nilpotency bound
        let mut pow2 = a2.clone();
        for _ in 1..cap {
            pow2 = stage2.mul(&pow2, &a2);
        }
        let a1 = stage2.transition(&stage1, &a2)?;
        let mut pow1 = a1.clone();
        for _ in 1..cap {
            pow1 = stage1.mul(&pow1, &a1);
        }
        // transition commutes with multiplication on the low part
        let moved = stage2.transition(&stage1, &pow2)?;
        if moved.truncate(cap) != pow1.truncate(cap) {
            return Ok(false);
        }

        // series multiplication agrees with the stage computation below
        // the cap
        let mut s = TruncSeries::<P>::zero(vec![1; r], cap);
        for (e, c) in &terms {
            s.add_term(e.clone(), c.clone());
        }
        let mut spow = s.clone();
        for _ in 1..cap {
            spow = spow.mul(&s)?;
        }
        if spow != pow2.truncate(cap) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gw_coeff::{Real, Split};

    type C = GWCoeff<Split>;

    #[test]
    fn truncation_discards_overflow() {
        let b = TruncSeries::<Split>::variable(vec![1], 1, 0);
        let sq = b.mul(&b).unwrap();
        assert!(sq.is_zero());
        let s = TruncSeries::<Split>::one(vec![1], 3);
        assert_eq!(s.mul(&s).unwrap(), s);
    }

    #[test]
    fn substitution_example() {
        // b -> y1 + y2 in b^2 at cap 2
        let b_sq = {
            let b = TruncSeries::<Split>::variable(vec![1], 2, 0);
            b.mul(&b).unwrap()
        };
        let mut img = TruncSeries::<Split>::zero(vec![1, 1], 2);
        img.add_term(vec![1, 0], C::one());
        img.add_term(vec![0, 1], C::one());
        let out = b_sq.substitute(&[img]).unwrap();
        assert_eq!(out.coeff(&[2, 0]), C::one());
        assert_eq!(out.coeff(&[1, 1]), C::from_int(2));
        assert_eq!(out.coeff(&[0, 2]), C::one());
    }

    #[test]
    fn constant_term_substitution_rejected() {
        let b = TruncSeries::<Split>::variable(vec![1], 2, 0);
        let img = TruncSeries::<Split>::one(vec![1], 2);
        assert!(b.substitute(&[img]).is_err());
    }

    #[test]
    fn sigma_weighted_basis_count() {
        // r = 2, cap 3: monomials s1^a s2^c with a + 2c <= 3
        let ms = monomials_up_to(&sigma_weights(2), 3);
        assert_eq!(ms.len(), 6);
        assert!(ms.contains(&vec![3, 0]));
        assert!(ms.contains(&vec![1, 1]));
        assert!(!ms.contains(&vec![2, 1]));
    }

    #[test]
    fn completion_map_r1() {
        let mut p = GWPoly::<Split>::zero(1);
        p.add_term(vec![5], C::one());
        p.add_term(vec![1], C::hyperbolic_minus());
        let s = completion_map(&p, 3).unwrap();
        assert_eq!(s.coeff(&[1]), C::hyperbolic_minus());
        assert!(s.coeff(&[5]).is_zero());
    }

    #[test]
    fn as_map_examples() {
        // r = 2: sigma_1 -> y1 + y2
        let mut p = GWPoly::<Split>::zero(2);
        p.add_term(vec![1, 0], C::one());
        let s = atiyah_segal_map(&p, 4).unwrap();
        assert_eq!(s.coeff(&[1, 0]), C::one());
        assert_eq!(s.coeff(&[0, 1]), C::one());
        assert_eq!(s.terms().count(), 2);
        // cap 0: everything but the constant dies
        let mut q = GWPoly::<Split>::zero(2);
        q.add_term(vec![0, 0], C::from_int(7));
        q.add_term(vec![1, 1], C::one());
        let s0 = atiyah_segal_map(&q, 0).unwrap();
        assert_eq!(s0.coeff(&[0, 0]), C::from_int(7));
        assert_eq!(s0.terms().count(), 1);
    }

    #[test]
    fn as_report_split_and_real() {
        for r in 1..=3usize {
            let rep = atiyah_segal_report::<Split>(r, 6).unwrap();
            assert!(rep.injective, "split r={r}");
            assert!(rep.surjective_onto_invariants, "split r={r}");
            let rep = atiyah_segal_report::<Real>(r, 5).unwrap();
            assert!(rep.injective, "real r={r}");
            assert!(rep.surjective_onto_invariants, "real r={r}");
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_with_parts_at_most(0, 3), 1);
        assert_eq!(partitions_with_parts_at_most(4, 2), 3); // 2+2, 2+1+1, 1+1+1+1
        assert_eq!(partitions_with_parts_at_most(5, 1), 1);
        assert_eq!(partitions_with_parts_at_most(3, 0), 0);
    }

    #[test]
    fn graded_topology() {
        assert!(graded_topology_check(1, 0, 4).unwrap());
        assert!(graded_topology_check(1, 1, 4).unwrap());
        assert!(graded_topology_check(2, 2, 6).unwrap());
        for r in 1..=3usize {
            for i in 0..=3u32 {
                assert!(graded_topology_check(r, i, 6).unwrap(), "r={r} i={i}");
            }
        }
    }

    #[test]
    fn finite_stage_basics() {
        let stage = FiniteStageRing::new(1, 1).unwrap();
        // b = 0 at nilpotency 1
        let b = stage.reduce::<Split>([(vec![1], C::one())]);
        assert!(b.terms().next().is_none());
        let big = FiniteStageRing::new(1, 5).unwrap();
        assert_eq!(big.low_degree_basis(3).len(), 4); // 1, b, b^2, b^3
    }

    #[test]
    fn transitions_compose() {
        let s5 = FiniteStageRing::new(2, 5).unwrap();
        let s3 = FiniteStageRing::new(2, 3).unwrap();
        let s2 = FiniteStageRing::new(2, 2).unwrap();
        let a = s5.reduce::<Split>([
            (vec![4, 0], C::one()),
            (vec![2, 1], C::hyperbolic_minus()),
            (vec![0, 0], C::from_int(3)),
        ]);
        let via = s3.transition(&s2, &s5.transition(&s3, &a).unwrap()).unwrap();
        let direct = s5.transition(&s2, &a).unwrap();
        assert_eq!(via, direct);
    }

    #[test]
    fn limit_consistency_both_models() {
        for r in 1..=2usize {
            assert!(limit_consistency::<Split>(r, 4).unwrap(), "split r={r}");
            assert!(limit_consistency::<Real>(r, 3).unwrap(), "real r={r}");
        }
    }
}
