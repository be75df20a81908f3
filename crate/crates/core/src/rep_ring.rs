//! Polynomial presentations of the representation ring: generator sets
//! with triangular shadows, expression of classes as polynomials in the
//! generators, and restriction along lattice maps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::char_ring::{
    decompose_character, k0_mul, lambda_character, weyl_character, K0Class, LaurentPoly,
};
use crate::error::{Error, Result};
use crate::linalg::{self, Solve};
use crate::root_system::{pairing, CartanType, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub symbol: String,
    pub shadow: K0Class,
    pub leading: Weight,
    pub invertible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
}

impl GeneratorSet {
    /// Validates the triangularity invariant: each shadow has its
    /// leading weight as unique maximum, with multiplicity one, and
    /// invertible shadows are single unit classes.
    pub fn new(rs: &RootSystem, gens: Vec<Generator>) -> Result<Self> {
        for g in &gens {
            let lead_mult = g.shadow.mult(&g.leading);
            if !lead_mult.is_one() {
                return Err(Error::GeneratorSetIncomplete(format!(
                    "generator {} has leading multiplicity {lead_mult}",
                    g.symbol
                )));
            }
            for (x, _) in g.shadow.mults() {
                if x != &g.leading && !rs.dominance_leq(x, &g.leading)? {
                    return Err(Error::GeneratorSetIncomplete(format!(
                        "generator {} has weight not below its leading weight",
                        g.symbol
                    )));
                }
            }
            if g.invertible && g.shadow.mults().count() != 1 {
                return Err(Error::GeneratorSetIncomplete(format!(
                    "invertible generator {} must be a single unit class",
                    g.symbol
                )));
            }
        }
        Ok(GeneratorSet { gens })
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn symbols(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.symbol.clone()).collect()
    }
}

/// Integer polynomial in the generators of a [`GeneratorSet`]; negative
/// exponents are allowed only in invertible slots.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GenPoly {
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl GenPoly {
    pub fn zero() -> Self {
        GenPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: BigInt, n_gens: usize) -> Self {
        let mut p = GenPoly::zero();
        p.add_term(vec![0; n_gens], c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
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

    pub fn add(&self, other: &GenPoly) -> GenPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &GenPoly) -> GenPoly {
        let mut out = GenPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    fn check_exponents(&self, gens: &GeneratorSet) -> Result<()> {
        for (e, _) in &self.terms {
            if e.len() != gens.len() {
                return Err(Error::RankMismatch { expected: gens.len(), got: e.len() });
            }
            for (x, g) in e.iter().zip(gens.gens()) {
                if *x < 0 && !g.invertible {
                    return Err(Error::OutOfRange(format!(
                        "negative exponent on non-invertible generator {}",
                        g.symbol
                    )));
                }
            }
        }
        Ok(())
    }
}

impl core::fmt::Display for GenPoly {
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
                    c.to_string()
                } else if c.is_one() {
                    vars.join("*")
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Evaluate a generator polynomial on the shadows, landing in K0.
pub fn evaluate(rs: &RootSystem, gens: &GeneratorSet, p: &GenPoly) -> Result<K0Class> {
    p.check_exponents(gens)?;
    let rank = rs.lattice_rank();
    let mut out = K0Class::zero();
    for (e, c) in p.terms() {
        let mut acc = K0Class::trivial(rank);
        for (x, g) in e.iter().zip(gens.gens()) {
            if *x == 0 {
                continue;
            }
            let base = if *x > 0 {
                g.shadow.clone()
            } else {
                // invertible: single unit class, inverse = negated weight
                let (w, _) = g.shadow.mults().next().unwrap();
                K0Class::of_weight(w.neg())
            };
            for _ in 0..x.unsigned_abs() {
                acc = k0_mul(rs, &acc, &base)?;
            }
        }
        for (z, m) in acc.mults() {
            out.add_mult(z.clone(), c * m);
        }
    }
    Ok(out)
}

/// Solve x = sum a_i * lead_i with a_i >= 0 on free slots, any sign on
/// invertible slots; `None` when the leading weights cannot reach x.
fn leading_exponent_solution(
    gens: &GeneratorSet,
    x: &Weight,
) -> Option<Vec<i64>> {
    let t = x.0.len();
    let n = gens.len();
    let a: Vec<Vec<_>> = (0..t)
        .map(|row| {
            (0..n)
                .map(|col| linalg::rat(gens.gens()[col].leading.0[row]))
                .collect()
        })
        .collect();
    let b: Vec<_> = x.0.iter().map(|&c| linalg::rat(c)).collect();
    let Solve::Unique(sol) = linalg::solve(&a, &b) else {
        return None;
    };
    let mut out = Vec::with_capacity(n);
    for (r, g) in sol.iter().zip(gens.gens()) {
        let n = linalg::as_integer(r)?;
        if !g.invertible && n.is_negative() {
            return None;
        }
        out.push(i64::try_from(&n).ok()?);
    }
    Some(out)
}

/// Write a K0 class as a polynomial in the generators by triangular
/// elimination along the (height, lex) refinement of dominance.
pub fn express_in_generators(
    rs: &RootSystem,
    c: &K0Class,
    gens: &GeneratorSet,
) -> Result<GenPoly> {
    let mut rem = c.clone();
    let mut out = GenPoly::zero();
    let mut last_key: Option<(i64, Vec<i64>)> = None;
    while !rem.is_zero() {
        let (x, m) = rem
            .mults()
            .max_by_key(|(x, _)| (pairing(&x.0, &rs.coroot_sum().0), x.0.clone()))
            .map(|(x, m)| (x.clone(), m.clone()))
            .unwrap();
        let key = (pairing(&x.0, &rs.coroot_sum().0), x.0.clone());
        if let Some(prev) = &last_key {
            if key >= *prev {
                return Err(Error::Internal(
                    "maximal weight failed to decrease during elimination".into(),
                ));
            }
        }
        last_key = Some(key);
        let Some(exp) = leading_exponent_solution(gens, &x) else {
            return Err(Error::GeneratorSetIncomplete(format!(
                "weight {x} is not in the span of the leading weights"
            )));
        };
        let mut mono = GenPoly::zero();
        mono.add_term(exp, m.clone());
        let value = evaluate(rs, gens, &mono)?;
        for (z, k) in value.mults() {
            rem.add_mult(z.clone(), -k.clone());
        }
        out = out.add(&mono);
    }
    Ok(out)
}

/// Transport a class along a lattice map (target-rank x source-rank
/// integer matrix on exponents) and re-decompose in the target system.
pub fn restrict_along(
    rs_source: &RootSystem,
    rs_target: &RootSystem,
    lattice_map: &[Vec<i64>],
    c: &K0Class,
) -> Result<K0Class> {
    if lattice_map.len() != rs_target.lattice_rank()
        || lattice_map
            .iter()
            .any(|row| row.len() != rs_source.lattice_rank())
    {
        return Err(Error::InvalidLatticeMap);
    }
    let mut image = LaurentPoly::zero();
    for (x, m) in c.mults() {
        let ch = weyl_character(rs_source, x)?;
        for (e, k) in ch.terms() {
            let mapped: Vec<i64> = lattice_map.iter().map(|row| pairing(row, e)).collect();
            image.add_term(mapped, m * k);
        }
    }
    decompose_character(rs_target, &image).map_err(|e| match e {
        Error::NotACharacter => Error::InvalidLatticeMap,
        other => other,
    })
}

/// The identity lattice map for the diagonal restriction from Sp_{2n}
/// to the product of its Sp_2 blocks.
pub fn diagonal_blocks_map(n: usize) -> Vec<Vec<i64>> {
    crate::root_system::identity_matrix(n)
}

/// Is the class on the n-block product invariant under permuting the
/// blocks?
pub fn sn_invariance_check(c: &K0Class, n: usize) -> bool {
    // invariance under all adjacent transpositions suffices
    for i in 0..n.saturating_sub(1) {
        let mut swapped = K0Class::zero();
        for (x, m) in c.mults() {
            let mut v = x.0.clone();
            v.swap(i, i + 1);
            swapped.add_mult(Weight(v), m.clone());
        }
        if &swapped != c {
            return false;
        }
    }
    true
}

/// Built-in generator presets addressable from configuration.
pub fn preset(rs: &RootSystem, name: &str) -> Result<GeneratorSet> {
    match name {
        "sp-lambda" => sp_lambda(rs),
        "gl-lambda-det" => gl_lambda_det(rs),
        "torus-standard" => torus_standard(rs),
        other => Err(Error::Mismatch(format!("unknown generator preset {other:?}"))),
    }
}

/// Exterior powers of the standard representation of Sp_{2n}.
pub fn sp_lambda(rs: &RootSystem) -> Result<GeneratorSet> {
    let ty = rs.cartan_type();
    if ty.family != crate::root_system::Family::C {
        return Err(Error::Mismatch("sp-lambda preset requires type C".into()));
    }
    let n = ty.semisimple_rank;
    let v = K0Class::of_weight(rs.fundamental_weights()[0].clone());
    let mut gens = Vec::new();
    for k in 1..=n {
        gens.push(Generator {
            symbol: format!("L{k}"),
            shadow: lambda_character(rs, &v, k)?,
            leading: rs.fundamental_weights()[k - 1].clone(),
            invertible: false,
        });
    }
    GeneratorSet::new(rs, gens)
}

/// Exterior powers of the standard representation of GL_n together with
/// the invertible determinant character.
pub fn gl_lambda_det(rs: &RootSystem) -> Result<GeneratorSet> {
    let ty = rs.cartan_type();
    if ty.family != crate::root_system::Family::AGl {
        return Err(Error::Mismatch("gl-lambda-det preset requires the GL lattice".into()));
    }
    let n = ty.lattice_rank;
    let v = K0Class::of_weight(rs.fundamental_weights()[0].clone());
    let mut gens = Vec::new();
    for k in 1..n {
        gens.push(Generator {
            symbol: format!("L{k}"),
            shadow: lambda_character(rs, &v, k)?,
            leading: rs.fundamental_weights()[k - 1].clone(),
            invertible: false,
        });
    }
    gens.push(Generator {
        symbol: "det".into(),
        shadow: K0Class::of_weight(Weight(vec![1; n])),
        leading: Weight(vec![1; n]),
        invertible: true,
    });
    GeneratorSet::new(rs, gens)
}

/// The coordinate characters of a split torus, all invertible.
pub fn torus_standard(rs: &RootSystem) -> Result<GeneratorSet> {
    let ty = rs.cartan_type();
    if ty.family != crate::root_system::Family::Torus {
        return Err(Error::Mismatch("torus-standard preset requires a torus".into()));
    }
    let m = ty.lattice_rank;
    let mut gens = Vec::new();
    for i in 0..m {
        let mut v = vec![0; m];
        v[i] = 1;
        gens.push(Generator {
            symbol: format!("z{}", i + 1),
            shadow: K0Class::of_weight(Weight(v.clone())),
            leading: Weight(v),
            invertible: true,
        });
    }
    GeneratorSet::new(rs, gens)
}

pub fn cartan_of(rs: &RootSystem) -> CartanType {
    rs.cartan_type()
}
