//! The sign-graded Hermitian ring of a group with duality in its
//! polynomial presentation: signed generators carrying K0 shadows and
//! augmentation values, the sign of a self-dual dominant weight, and
//! the exterior-power / Borel-class bases for the symplectic groups.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::char_ring::K0Class;
use crate::diag_restrict::{restrict_lambda, to_elementary_symmetric, v_to_b};
use crate::error::{Error, Result};
use crate::gw_coeff::{GWCoeff, PlusPart};
use crate::rep_ring::{self, GenPoly, GeneratorSet};
use crate::root_system::{
    dual_dominant_weight, duality_involution, identity_matrix, pairing, Family,
    InvolutionSpec, RootSystem, Weight,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityPreset {
    /// Symplectic groups with the identity involution.
    SpIdentity,
    /// Split torus with the inversion involution.
    TorusInversion,
    /// GL_n with the transpose-inverse involution.
    GLTransposeInverse,
}

impl DualityPreset {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "sp-identity" => Ok(Self::SpIdentity),
            "torus-inversion" => Ok(Self::TorusInversion),
            "gl-transpose-inverse" => Ok(Self::GLTransposeInverse),
            other => Err(Error::Mismatch(format!("unknown duality preset {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DualityData {
    pub preset: DualityPreset,
    pub involution: InvolutionSpec,
}

/// Build the duality data for a preset, checking it fits the family.
pub fn duality_data(rs: &RootSystem, preset: DualityPreset) -> Result<DualityData> {
    let t = rs.lattice_rank();
    let family = rs.cartan_type().family;
    let iota_star = match (preset, family) {
        (DualityPreset::SpIdentity, Family::C | Family::Sp2Blocks) => identity_matrix(t),
        (DualityPreset::TorusInversion, Family::Torus)
        | (DualityPreset::GLTransposeInverse, Family::AGl) => {
            let mut m = identity_matrix(t);
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = -1;
            }
            m
        }
        _ => {
            return Err(Error::InvalidInvolution(format!(
                "preset {preset:?} does not apply to {}",
                rs.cartan_type()
            )))
        }
    };
    Ok(DualityData { preset, involution: duality_involution(rs, iota_star)? })
}

/// Sign of the irreducible with highest weight x: +1 symmetric, -1
/// anti-symmetric, 0 when not self-dual under the chosen duality.
pub fn sign_of_weight(rs: &RootSystem, dd: &DualityData, x: &Weight) -> Result<i8> {
    let dual = dual_dominant_weight(rs, &dd.involution, x)?;
    if &dual != x {
        return Ok(0);
    }
    match dd.preset {
        DualityPreset::SpIdentity => {
            let h = pairing(&x.0, &rs.coroot_sum().0);
            Ok(if h % 2 == 0 { 1 } else { -1 })
        }
        DualityPreset::TorusInversion | DualityPreset::GLTransposeInverse => Ok(1),
    }
}

/// Sign under an arbitrary explicit involution: only the self-duality
/// test is decidable in general, so the result is 0 or `None`.
pub fn sign_if_not_self_dual(
    rs: &RootSystem,
    inv: &InvolutionSpec,
    x: &Weight,
) -> Result<Option<i8>> {
    let dual = dual_dominant_weight(rs, inv, x)?;
    Ok(if &dual == x { None } else { Some(0) })
}

/// Generator of the graded polynomial presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGenerator<P: PlusPart> {
    pub symbol: String,
    pub sign: i8,
    pub shadow: K0Class,
    pub leading: Weight,
    pub augmentation: GWCoeff<P>,
    pub invertible: bool,
}

/// Polynomial in signed generators with graded coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GWPoly<P: PlusPart> {
    n_gens: usize,
    terms: BTreeMap<Vec<i64>, GWCoeff<P>>,
}

impl<P: PlusPart> GWPoly<P> {
    pub fn zero(n_gens: usize) -> Self {
        GWPoly { n_gens, terms: BTreeMap::new() }
    }

    pub fn constant(n_gens: usize, c: GWCoeff<P>) -> Self {
        let mut p = Self::zero(n_gens);
        p.add_term(vec![0; n_gens], c);
        p
    }

    pub fn one(n_gens: usize) -> Self {
        Self::constant(n_gens, GWCoeff::one())
    }

    pub fn generator(n_gens: usize, i: usize) -> Self {
        let mut e = vec![0; n_gens];
        e[i] = 1;
        let mut p = Self::zero(n_gens);
        p.add_term(e, GWCoeff::one());
        p
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &GWCoeff<P>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[i64]) -> GWCoeff<P> {
        self.terms.get(e).cloned().unwrap_or_else(GWCoeff::zero)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: GWCoeff<P>) {
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
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        GWPoly {
            n_gens: self.n_gens,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n_gens);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul(c2));
            }
        }
        Ok(out)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n_gens != other.n_gens {
            return Err(Error::Mismatch("generator set mismatch".into()));
        }
        Ok(())
    }

    /// Substitute generator i by `images[i]` (non-negative exponents
    /// only).
    pub fn substitute(&self, images: &[GWPoly<P>]) -> Result<GWPoly<P>> {
        if images.len() != self.n_gens {
            return Err(Error::Mismatch("wrong number of substitution images".into()));
        }
        let out_gens = images
            .first()
            .map(|p| p.n_gens)
            .unwrap_or(self.n_gens);
        let mut out = GWPoly::zero(out_gens);
        for (e, c) in &self.terms {
            let mut mono = GWPoly::constant(out_gens, c.clone());
            for (i, &power) in e.iter().enumerate() {
                if power < 0 {
                    return Err(Error::OutOfRange(
                        "cannot substitute into negative exponents".into(),
                    ));
                }
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

    /// Total sign of the polynomial when homogeneous: each monomial
    /// contributes the product of generator signs (by exponent) times
    /// the homogeneity of its coefficient.
    pub fn homogeneous_sign(&self, gens: &[SignedGenerator<P>]) -> Option<i8> {
        let mut total: Option<i8> = None;
        for (e, c) in &self.terms {
            let coeff_sign = crate::gw_coeff::homogeneous_sign(c)?;
            let mut s = coeff_sign;
            for (x, g) in e.iter().zip(gens) {
                if x % 2 != 0 && g.sign == -1 {
                    s = -s;
                }
            }
            match total {
                None => total = Some(s),
                Some(t) if t == s => {}
                _ => return None,
            }
        }
        total
    }
}

impl<P: PlusPart> core::fmt::Display for GWPoly<P> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_zero() {
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
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("g{}", i + 1)
                        } else {
                            format!("g{}^{}", i + 1, x)
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

/// Rank-level image: coefficients map to their rank, generators to
/// their shadow symbols.
pub fn forgetful<P: PlusPart>(p: &GWPoly<P>) -> GenPoly {
    let mut out = GenPoly::zero();
    for (e, c) in p.terms() {
        out.add_term(e.clone(), c.rank());
    }
    out
}

/// Evaluate at the augmentation values of the generators.
pub fn augmentation<P: PlusPart>(
    p: &GWPoly<P>,
    gens: &[SignedGenerator<P>],
) -> Result<GWCoeff<P>> {
    if p.n_gens() != gens.len() {
        return Err(Error::Mismatch("generator set mismatch".into()));
    }
    let mut out = GWCoeff::zero();
    for (e, c) in p.terms() {
        let mut acc = c.clone();
        for (x, g) in e.iter().zip(gens) {
            if *x < 0 {
                return Err(Error::OutOfRange(
                    "negative exponent in augmentation".into(),
                ));
            }
            for _ in 0..*x {
                acc = acc.mul(&g.augmentation);
            }
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Coefficients of (1 + Hm t + t^2)^r: the augmentation values of the
/// exterior powers.
fn hyperbolic_lambda_coeffs<P: PlusPart>(r: usize) -> Vec<GWCoeff<P>> {
    let mut coeffs: Vec<GWCoeff<P>> = vec![GWCoeff::zero(); 2 * r + 1];
    coeffs[0] = GWCoeff::one();
    let hm = GWCoeff::hyperbolic_minus();
    for _ in 0..r {
        for d in (0..=2 * r).rev() {
            let mut acc = coeffs[d].clone();
            if d >= 1 {
                acc = acc.add(&coeffs[d - 1].mul(&hm));
            }
            if d >= 2 {
                acc = acc.add(&coeffs[d - 2]);
            }
            coeffs[d] = acc;
        }
    }
    coeffs
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpBasis {
    Lambda,
    Borel,
}

/// The graded ring of Sp_{2r} with both generator bases and the
/// triangular change of basis between them.
pub struct SpGwRing<P: PlusPart> {
    pub r: usize,
    pub lambda_gens: Vec<SignedGenerator<P>>,
    pub borel_gens: Vec<SignedGenerator<P>>,
    /// Expression of each exterior power in the Borel generators.
    lambda_in_borel: Vec<GWPoly<P>>,
    /// Expression of each Borel generator in the exterior powers.
    borel_in_lambda: Vec<GWPoly<P>>,
}

impl<P: PlusPart> SpGwRing<P> {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let ty = rs.cartan_type();
        if ty.family != Family::C {
            return Err(Error::Mismatch("symplectic basis requires type C".into()));
        }
        let r = ty.semisimple_rank;
        let k0_gens = rep_ring::sp_lambda(rs)?;
        let augs = hyperbolic_lambda_coeffs::<P>(r);

        let mut lambda_gens = Vec::with_capacity(r);
        for k in 1..=r {
            let g = &k0_gens.gens()[k - 1];
            let aug = augs[k].clone();
            // rank of the augmentation must match the dimension
            let dim: BigInt = g
                .shadow
                .mults()
                .map(|(x, m)| m * crate::char_ring::weyl_dimension(rs, x).unwrap())
                .sum();
            if aug.rank() != dim {
                return Err(Error::Internal(
                    "augmentation rank does not match shadow dimension".into(),
                ));
            }
            lambda_gens.push(SignedGenerator {
                symbol: format!("L{k}"),
                sign: if k % 2 == 0 { 1 } else { -1 },
                shadow: g.shadow.clone(),
                leading: g.leading.clone(),
                augmentation: aug,
                invertible: false,
            });
        }

        // Express each exterior power in the Borel generators: restrict
        // to the blocks, shift to b-variables, and collect elementary
        // symmetric functions of the b's.
        let mut lambda_in_borel = Vec::with_capacity(r);
        for k in 1..=r {
            let in_b = v_to_b(&restrict_lambda::<P>(k, r)?)?;
            let sym = to_elementary_symmetric(&in_b)?;
            let mut poly = GWPoly::zero(r);
            for (e, c) in sym.terms() {
                poly.add_term(e.iter().map(|&x| i64::from(x)).collect(), c.clone());
            }
            lambda_in_borel.push(poly);
        }

        // Invert the triangular system: s_k = L_k - (lower-order terms
        // of lambda_in_borel[k] rewritten in the exterior powers).
        let mut borel_in_lambda: Vec<GWPoly<P>> = Vec::with_capacity(r);
        for k in 1..=r {
            let mut ek = vec![0i64; r];
            ek[k - 1] = 1;
            let mut lower = lambda_in_borel[k - 1].clone();
            lower.add_term(ek, GWCoeff::one().neg());
            // `lower` only involves s_j with j < k, already solved
            let mut images: Vec<GWPoly<P>> = borel_in_lambda.clone();
            images.resize(r, GWPoly::zero(r));
            let lower_in_lambda = lower.substitute(&images)?;
            let sk = GWPoly::generator(r, k - 1).sub(&lower_in_lambda)?;
            borel_in_lambda.push(sk);
        }

        // Borel generators: shadows via the rank-level image of the
        // lambda expression; augmentation must vanish.
        let mut borel_gens = Vec::with_capacity(r);
        for k in 1..=r {
            let expr = &borel_in_lambda[k - 1];
            if !augmentation(expr, &lambda_gens)?.is_zero() {
                return Err(Error::Internal(
                    "Borel generator has non-zero augmentation".into(),
                ));
            }
            let shadow = rep_ring::evaluate(rs, &k0_gens, &forgetful(expr))?;
            borel_gens.push(SignedGenerator {
                symbol: format!("s{k}"),
                sign: if k % 2 == 0 { 1 } else { -1 },
                shadow,
                leading: rs.fundamental_weights()[k - 1].clone(),
                augmentation: GWCoeff::zero(),
                invertible: false,
            });
        }

        Ok(SpGwRing { r, lambda_gens, borel_gens, lambda_in_borel, borel_in_lambda })
    }

    pub fn generators(&self, basis: SpBasis) -> &[SignedGenerator<P>] {
        match basis {
            SpBasis::Lambda => &self.lambda_gens,
            SpBasis::Borel => &self.borel_gens,
        }
    }

    pub fn lambda_to_borel(&self, p: &GWPoly<P>) -> Result<GWPoly<P>> {
        p.substitute(&self.lambda_in_borel)
    }

    pub fn borel_to_lambda(&self, p: &GWPoly<P>) -> Result<GWPoly<P>> {
        p.substitute(&self.borel_in_lambda)
    }
}

/// Signed generator set for Sp_{2r} in the requested basis.
pub fn sp_generator_set<P: PlusPart>(
    rs: &RootSystem,
    basis: SpBasis,
) -> Result<Vec<SignedGenerator<P>>> {
    let ring = SpGwRing::<P>::new(rs)?;
    Ok(match basis {
        SpBasis::Lambda => ring.lambda_gens,
        SpBasis::Borel => ring.borel_gens,
    })
}

/// K0 generator set matching the shadows of a signed generator set.
pub fn shadow_generator_set<P: PlusPart>(
    rs: &RootSystem,
    gens: &[SignedGenerator<P>],
) -> Result<GeneratorSet> {
    GeneratorSet::new(
        rs,
        gens.iter()
            .map(|g| rep_ring::Generator {
                symbol: g.symbol.to_string(),
                shadow: g.shadow.clone(),
                leading: g.leading.clone(),
                invertible: g.invertible,
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gw_coeff::{Real, Split};
    use crate::root_system::CartanType;
    use num_traits::One;

    fn rs(ty: &str) -> RootSystem {
        RootSystem::new(CartanType::parse(ty).unwrap()).unwrap()
    }

    fn w(coords: &[i64]) -> Weight {
        Weight(coords.to_vec())
    }

    #[test]
    fn sp_sign_is_alternating_on_fundamentals() {
        for n in 1..=4usize {
            let cn = rs(&format!("C{n}"));
            let dd = duality_data(&cn, DualityPreset::SpIdentity).unwrap();
            for (i, omega) in cn.fundamental_weights().iter().enumerate() {
                let expected = if (i + 1) % 2 == 0 { 1 } else { -1 };
                assert_eq!(sign_of_weight(&cn, &dd, omega).unwrap(), expected);
            }
        }
    }

    #[test]
    fn sp_sign_is_total() {
        let c3 = rs("C3");
        let dd = duality_data(&c3, DualityPreset::SpIdentity).unwrap();
        for a in 0..3i64 {
            for b in 0..3i64 {
                for c in 0..2i64 {
                    let x = c3.from_fundamental(&[a, b, c]).unwrap();
                    assert_ne!(sign_of_weight(&c3, &dd, &x).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn sign_multiplicative() {
        let c3 = rs("C3");
        let dd = duality_data(&c3, DualityPreset::SpIdentity).unwrap();
        let xs = [
            c3.from_fundamental(&[1, 0, 0]).unwrap(),
            c3.from_fundamental(&[0, 1, 1]).unwrap(),
            c3.from_fundamental(&[2, 0, 1]).unwrap(),
        ];
        for x in &xs {
            for y in &xs {
                let sx = sign_of_weight(&c3, &dd, x).unwrap();
                let sy = sign_of_weight(&c3, &dd, y).unwrap();
                let sxy = sign_of_weight(&c3, &dd, &x.add(y)).unwrap();
                assert_eq!(sxy, sx * sy);
            }
        }
    }

    #[test]
    fn torus_signs() {
        let t2 = rs("T2");
        let inv = duality_data(&t2, DualityPreset::TorusInversion).unwrap();
        assert_eq!(sign_of_weight(&t2, &inv, &w(&[3, -1])).unwrap(), 1);
        assert_eq!(sign_of_weight(&t2, &inv, &w(&[0, 0])).unwrap(), 1);
        // the transpose-inverse twist makes every GL representation
        // self-dual symmetric
        let gl3 = rs("A2gl");
        let dd = duality_data(&gl3, DualityPreset::GLTransposeInverse).unwrap();
        assert_eq!(sign_of_weight(&gl3, &dd, &w(&[1, 0, -1])).unwrap(), 1);
        assert_eq!(sign_of_weight(&gl3, &dd, &w(&[1, 0, 0])).unwrap(), 1);
        // torus with the trivial involution: nothing but 0 is self-dual
        let triv = duality_involution(&t2, identity_matrix(2)).unwrap();
        assert_eq!(sign_if_not_self_dual(&t2, &triv, &w(&[1, 0])).unwrap(), Some(0));
        assert_eq!(sign_if_not_self_dual(&t2, &triv, &w(&[0, 0])).unwrap(), None);
    }

    #[test]
    fn preset_family_mismatch_rejected() {
        let t2 = rs("T2");
        assert!(duality_data(&t2, DualityPreset::SpIdentity).is_err());
        let c2 = rs("C2");
        assert!(duality_data(&c2, DualityPreset::TorusInversion).is_err());
    }

    #[test]
    fn sp2_generators() {
        let c1 = rs("C1");
        let gens = sp_generator_set::<Split>(&c1, SpBasis::Lambda).unwrap();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].sign, -1);
        assert_eq!(gens[0].augmentation, GWCoeff::hyperbolic_minus());
        let borel = sp_generator_set::<Split>(&c1, SpBasis::Borel).unwrap();
        assert!(borel[0].augmentation.is_zero());
    }

    #[test]
    fn sp4_lambda2_augmentation() {
        let c2 = rs("C2");
        let gens = sp_generator_set::<Split>(&c2, SpBasis::Lambda).unwrap();
        // coefficient of t^2 in (1 + Hm t + t^2)^2 = Hm^2 + 2 = 2Hp + 2
        let expected = GWCoeff::<Split>::from_int(2)
            .add(&GWCoeff::hyperbolic_minus().mul(&GWCoeff::hyperbolic_minus()));
        assert_eq!(gens[1].augmentation, expected);
        let real_gens = sp_generator_set::<Real>(&c2, SpBasis::Lambda).unwrap();
        let expected_real = GWCoeff::<Real>::from_int(2).add(
            &GWCoeff::hyperbolic_plus().add(&GWCoeff::hyperbolic_plus()),
        );
        assert_eq!(real_gens[1].augmentation, expected_real);
    }

    #[test]
    fn basis_conversion_roundtrip() {
        for ty in ["C1", "C2", "C3"] {
            let sys = rs(ty);
            let ring = SpGwRing::<Split>::new(&sys).unwrap();
            let r = ring.r;
            // a few polynomials in the lambda basis
            let mut p = GWPoly::one(r);
            for i in 0..r {
                let g = GWPoly::generator(r, i);
                p = p.add(&g.mul(&g).unwrap()).unwrap();
                p = p
                    .add(&GWPoly::constant(r, GWCoeff::hyperbolic_minus()).mul(&g).unwrap())
                    .unwrap();
            }
            let q = ring.lambda_to_borel(&p).unwrap();
            assert_eq!(ring.borel_to_lambda(&q).unwrap(), p, "{ty}");
            // augmentation preserved
            assert_eq!(
                augmentation(&p, &ring.lambda_gens).unwrap(),
                augmentation(&q, &ring.borel_gens).unwrap(),
                "{ty}"
            );
        }
    }

    #[test]
    fn sp2_v_equals_b_plus_hm() {
        let c1 = rs("C1");
        let ring = SpGwRing::<Split>::new(&c1).unwrap();
        let v = GWPoly::generator(1, 0);
        let in_borel = ring.lambda_to_borel(&v).unwrap();
        assert_eq!(in_borel.coeff(&[1]), GWCoeff::one());
        assert_eq!(in_borel.coeff(&[0]), GWCoeff::hyperbolic_minus());
    }

    #[test]
    fn gw_mul_sign_grading() {
        let c1 = rs("C1");
        let ring = SpGwRing::<Split>::new(&c1).unwrap();
        let b = GWPoly::<Split>::generator(1, 0);
        let b2 = b.mul(&b).unwrap();
        assert_eq!(b.homogeneous_sign(&ring.borel_gens), Some(-1));
        assert_eq!(b2.homogeneous_sign(&ring.borel_gens), Some(1));
        let hm = GWPoly::constant(1, GWCoeff::<Split>::hyperbolic_minus());
        assert_eq!(hm.mul(&hm).unwrap().coeff(&[0]), GWCoeff::from_int(4));
    }

    #[test]
    fn augmentation_is_ring_homomorphism() {
        let c2 = rs("C2");
        let ring = SpGwRing::<Split>::new(&c2).unwrap();
        let a = GWPoly::generator(2, 0)
            .add(&GWPoly::constant(2, GWCoeff::from_int(3)))
            .unwrap();
        let b = GWPoly::generator(2, 1)
            .mul(&GWPoly::generator(2, 0))
            .unwrap();
        let lhs = augmentation(&a.mul(&b).unwrap(), &ring.lambda_gens).unwrap();
        let rhs = augmentation(&a, &ring.lambda_gens)
            .unwrap()
            .mul(&augmentation(&b, &ring.lambda_gens).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn forgetful_is_rank_level() {
        let p = GWPoly::constant(1, GWCoeff::<Split>::hyperbolic_minus());
        let f = forgetful(&p);
        assert_eq!(f.coeff(&[0]), BigInt::from(2));
        assert_eq!(forgetful(&GWPoly::<Split>::one(1)).coeff(&[0]), BigInt::one());
    }

    #[test]
    fn graded_basis_shadow_check() {
        // forgetful images of monomials in the lambda generators are
        // triangular against the irreducible basis: leading weight
        // matches the exponent pairing on fundamental weights
        for ty in ["C2", "C3"] {
            let sys = rs(ty);
            let ring = SpGwRing::<Split>::new(&sys).unwrap();
            let k0_gens = shadow_generator_set(&sys, &ring.lambda_gens).unwrap();
            let r = ring.r;
            let exps: Vec<Vec<i64>> = match r {
                2 => vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0]],
                _ => vec![vec![1, 0, 0], vec![0, 1, 1], vec![1, 0, 1]],
            };
            for e in exps {
                let mut mono = GenPoly::zero();
                mono.add_term(e.clone(), BigInt::one());
                let value = rep_ring::evaluate(&sys, &k0_gens, &mono).unwrap();
                // expected leading weight: sum of e_k * omega_k
                let lead: Vec<i64> = sys
                    .fundamental_weights()
                    .iter()
                    .zip(&e)
                    .fold(vec![0; r], |acc, (omega, &k)| {
                        acc.iter()
                            .zip(&omega.0)
                            .map(|(a, o)| a + k * o)
                            .collect()
                    });
                let lead = Weight(lead);
                assert_eq!(value.mult(&lead), BigInt::one(), "{ty} {e:?}");
                for (x, _) in value.mults() {
                    assert!(sys.dominance_leq(x, &lead).unwrap(), "{ty} {e:?}");
                }
            }
        }
    }
}
