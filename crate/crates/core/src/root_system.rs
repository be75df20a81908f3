//! Root-system and weight-lattice data for C_n, A_{n-1} on the GL_n lattice,
//! split tori, and products of C_1 blocks (the diagonal Sp_2 x ... x Sp_2).
//!
//! Weights live in epsilon-coordinates on X* = Z^t throughout: for C_n the
//! simple roots are e_i - e_{i+1} and 2e_n, for the GL lattice they are
//! e_i - e_{i+1}. With this choice the restriction from Sp_{2n} to the
//! diagonal Sp_2 blocks is the identity on coordinates.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::{self, Solve};

/// Default cap on the lattice rank for which Weyl groups are enumerated.
pub const DEFAULT_RANK_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// A_{n-1} realized on the rank-n GL lattice.
    AGl,
    /// C_n, the symplectic group Sp_{2n}.
    C,
    /// Split torus; no roots.
    Torus,
    /// n commuting C_1 blocks: the diagonal Sp_2^{x n} inside Sp_{2n}.
    Sp2Blocks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub semisimple_rank: usize,
    pub lattice_rank: usize,
}

impl CartanType {
    pub fn c(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidType("C_n requires n >= 1".into()));
        }
        Ok(CartanType { family: Family::C, semisimple_rank: n, lattice_rank: n })
    }

    /// GL_n: semisimple rank n-1 on a rank-n lattice.
    pub fn a_gl(lattice_rank: usize) -> Result<Self> {
        if lattice_rank < 2 {
            return Err(Error::InvalidType("GL lattice requires rank >= 2".into()));
        }
        Ok(CartanType {
            family: Family::AGl,
            semisimple_rank: lattice_rank - 1,
            lattice_rank,
        })
    }

    pub fn torus(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidType("torus requires rank >= 1".into()));
        }
        Ok(CartanType { family: Family::Torus, semisimple_rank: 0, lattice_rank: m })
    }

    pub fn sp2_blocks(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidType("Sp_2 product requires n >= 1".into()));
        }
        Ok(CartanType { family: Family::Sp2Blocks, semisimple_rank: n, lattice_rank: n })
    }

    /// Text format: "C3", "A2gl", "T4", "C1x3".
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidType(format!("cannot parse Cartan type {s:?}"));
        if let Some(rest) = s.strip_prefix("C1x") {
            let n: usize = rest.parse().map_err(|_| bad())?;
            return CartanType::sp2_blocks(n);
        }
        if let Some(rest) = s.strip_prefix('C') {
            let n: usize = rest.parse().map_err(|_| bad())?;
            return CartanType::c(n);
        }
        if let Some(rest) = s.strip_prefix('A') {
            let rest = rest.strip_suffix("gl").ok_or_else(bad)?;
            let n: usize = rest.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return CartanType::a_gl(n + 1);
        }
        if let Some(rest) = s.strip_prefix('T') {
            let m: usize = rest.parse().map_err(|_| bad())?;
            return CartanType::torus(m);
        }
        Err(bad())
    }
}

impl core::fmt::Display for CartanType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self.family {
            Family::C => write!(f, "C{}", self.semisimple_rank),
            Family::AGl => write!(f, "A{}gl", self.semisimple_rank),
            Family::Torus => write!(f, "T{}", self.lattice_rank),
            Family::Sp2Blocks => write!(f, "C1x{}", self.semisimple_rank),
        }
    }
}

/// Element of the character lattice X*, in epsilon-coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

/// Element of the cocharacter lattice X_*.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(vec_add(&self.0, &other.0))
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(vec_sub(&self.0, &other.0))
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|&c| -c).collect())
    }
}

impl core::fmt::Display for Weight {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn vec_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Canonical pairing X* x X_* -> Z; both sides in epsilon-coordinates.
pub fn pairing(x: &[i64], c: &[i64]) -> i64 {
    x.iter().zip(c).map(|(a, b)| a * b).sum()
}

/// A Weyl group element as an integer matrix on X* (row-major), with its
/// determinant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub det: i8,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { matrix: identity_matrix(rank), det: 1 }
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        apply_matrix(&self.matrix, x)
    }
}

pub fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn apply_matrix(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter().map(|row| pairing(row, x)).collect()
}

pub fn matrix_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn matrix_neg(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    a.iter()
        .map(|row| row.iter().map(|&x| -x).collect())
        .collect()
}

/// The involution data attached to a group involution stabilizing the torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionSpec {
    /// Action of the involution on X* (row-major matrix).
    pub iota_star: Vec<Vec<i64>>,
    /// The unique Weyl element aligning -iota_star with the dominant chamber.
    pub w_iota: WeylElement,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: CartanType,
    simple_roots: Vec<Weight>,
    simple_coroots: Vec<Coweight>,
    positive_roots: Vec<Weight>,
    positive_coroots: Vec<Coweight>,
    fundamental_weights: Vec<Weight>,
    cartan_matrix: Vec<Vec<i64>>,
    /// Sum of positive roots (the doubled Weyl vector 2*rho).
    two_rho: Vec<i64>,
    /// Sum of positive coroots.
    coroot_sum: Coweight,
    weyl: Vec<WeylElement>,
}

impl RootSystem {
    pub fn new(ty: CartanType) -> Result<Self> {
        Self::with_rank_cap(ty, DEFAULT_RANK_CAP)
    }

    pub fn with_rank_cap(ty: CartanType, cap: usize) -> Result<Self> {
        if ty.family != Family::Torus && ty.lattice_rank > cap {
            return Err(Error::OutOfRange(format!(
                "lattice rank {} exceeds the Weyl enumeration cap {}",
                ty.lattice_rank, cap
            )));
        }
        let t = ty.lattice_rank;
        let (simple_roots, simple_coroots, fundamental_weights): (
            Vec<Weight>,
            Vec<Coweight>,
            Vec<Weight>,
        ) = match ty.family {
            Family::C => {
                let n = ty.semisimple_rank;
                let mut roots = Vec::new();
                let mut coroots = Vec::new();
                for i in 0..n - 1 {
                    roots.push(Weight(basis_diff(t, i, i + 1)));
                    coroots.push(Coweight(basis_diff(t, i, i + 1)));
                }
                let mut long = vec![0; t];
                long[n - 1] = 2;
                roots.push(Weight(long));
                let mut long_co = vec![0; t];
                long_co[n - 1] = 1;
                coroots.push(Coweight(long_co));
                let fund = (0..n)
                    .map(|i| {
                        let mut v = vec![0; t];
                        v[..=i].fill(1);
                        Weight(v)
                    })
                    .collect();
                (roots, coroots, fund)
            }
            Family::AGl => {
                let n = ty.semisimple_rank;
                let roots: Vec<Weight> =
                    (0..n).map(|i| Weight(basis_diff(t, i, i + 1))).collect();
                let coroots =
                    (0..n).map(|i| Coweight(basis_diff(t, i, i + 1))).collect();
                let fund = (0..n)
                    .map(|i| {
                        let mut v = vec![0; t];
                        v[..=i].fill(1);
                        Weight(v)
                    })
                    .collect();
                (roots, coroots, fund)
            }
            Family::Torus => (Vec::new(), Vec::new(), Vec::new()),
            Family::Sp2Blocks => {
                let n = ty.semisimple_rank;
                let roots = (0..n)
                    .map(|i| {
                        let mut v = vec![0; t];
                        v[i] = 2;
                        Weight(v)
                    })
                    .collect();
                let coroots = (0..n)
                    .map(|i| {
                        let mut v = vec![0; t];
                        v[i] = 1;
                        Coweight(v)
                    })
                    .collect();
                let fund = (0..n)
                    .map(|i| {
                        let mut v = vec![0; t];
                        v[i] = 1;
                        Weight(v)
                    })
                    .collect();
                (roots, coroots, fund)
            }
        };

        let mut rs = RootSystem {
            ty,
            simple_roots,
            simple_coroots,
            fundamental_weights,
            positive_roots: Vec::new(),
            positive_coroots: Vec::new(),
            cartan_matrix: Vec::new(),
            two_rho: vec![0; t],
            coroot_sum: Coweight(vec![0; t]),
            weyl: Vec::new(),
        };

        let r = rs.simple_roots.len();
        rs.cartan_matrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| pairing(&rs.simple_roots[j].0, &rs.simple_coroots[i].0))
                    .collect()
            })
            .collect();

        rs.generate_positive_roots()?;
        rs.two_rho = rs
            .positive_roots
            .iter()
            .fold(vec![0; t], |acc, root| vec_add(&acc, &root.0));
        rs.coroot_sum = Coweight(
            rs.positive_coroots
                .iter()
                .fold(vec![0; t], |acc, c| vec_add(&acc, &c.0)),
        );
        rs.weyl = rs.enumerate_weyl();
        rs.check_invariants()?;
        Ok(rs)
    }

    /// Close the simple roots under simple reflections and keep the positive
    /// elements, carrying the paired coroot along each reflection.
    fn generate_positive_roots(&mut self) -> Result<()> {
        let mut all: Vec<(Vec<i64>, Vec<i64>)> = self
            .simple_roots
            .iter()
            .zip(&self.simple_coroots)
            .map(|(r, c)| (r.0.clone(), c.0.clone()))
            .collect();
        let mut queue: Vec<usize> = (0..all.len()).collect();
        while let Some(idx) = queue.pop() {
            let (root, coroot) = all[idx].clone();
            for i in 0..self.simple_roots.len() {
                let new_root = self.reflect_weight(i, &root);
                let new_coroot = self.reflect_coweight(i, &coroot);
                if !all.iter().any(|(r, _)| *r == new_root) {
                    all.push((new_root, new_coroot));
                    queue.push(all.len() - 1);
                }
            }
        }
        for (root, coroot) in all {
            if self.in_positive_span(&root) {
                self.positive_roots.push(Weight(root));
                self.positive_coroots.push(Coweight(coroot));
            }
        }
        // deterministic order
        let mut pairs: Vec<(Weight, Coweight)> = self
            .positive_roots
            .drain(..)
            .zip(self.positive_coroots.drain(..))
            .collect();
        pairs.sort();
        for (r, c) in pairs {
            self.positive_roots.push(r);
            self.positive_coroots.push(c);
        }
        Ok(())
    }

    /// Is `v` a non-negative rational combination of the simple roots?
    fn in_positive_span(&self, v: &[i64]) -> bool {
        match self.simple_root_coords(v) {
            Some(coords) => coords.iter().all(|c| !num_traits::Signed::is_negative(c)),
            None => false,
        }
    }

    /// Coordinates of `v` in the simple-root basis, if it lies in their span.
    pub fn simple_root_coords(&self, v: &[i64]) -> Option<Vec<BigRational>> {
        let t = self.ty.lattice_rank;
        let r = self.simple_roots.len();
        if r == 0 {
            return if v.iter().all(|&c| c == 0) { Some(Vec::new()) } else { None };
        }
        let a: Vec<Vec<BigRational>> = (0..t)
            .map(|row| (0..r).map(|col| linalg::rat(self.simple_roots[col].0[row])).collect())
            .collect();
        let b: Vec<BigRational> = v.iter().map(|&c| linalg::rat(c)).collect();
        match linalg::solve(&a, &b) {
            Solve::Unique(x) => Some(x),
            _ => None,
        }
    }

    fn reflect_weight(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let n = pairing(x, &self.simple_coroots[i].0);
        x.iter()
            .zip(&self.simple_roots[i].0)
            .map(|(&c, &a)| c - n * a)
            .collect()
    }

    fn reflect_coweight(&self, i: usize, c: &[i64]) -> Vec<i64> {
        let n = pairing(&self.simple_roots[i].0, c);
        c.iter()
            .zip(&self.simple_coroots[i].0)
            .map(|(&v, &a)| v - n * a)
            .collect()
    }

    fn simple_reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let t = self.ty.lattice_rank;
        let mut cols: Vec<Vec<i64>> = Vec::with_capacity(t);
        for j in 0..t {
            let mut e = vec![0; t];
            e[j] = 1;
            cols.push(self.reflect_weight(i, &e));
        }
        // cols[j] is the image of e_j; transpose to row-major.
        (0..t).map(|row| (0..t).map(|col| cols[col][row]).collect()).collect()
    }

    fn enumerate_weyl(&self) -> Vec<WeylElement> {
        let t = self.ty.lattice_rank;
        let gens: Vec<Vec<Vec<i64>>> = (0..self.simple_roots.len())
            .map(|i| self.simple_reflection_matrix(i))
            .collect();
        let mut elements = vec![WeylElement::identity(t)];
        let mut frontier = vec![0usize];
        while let Some(idx) = frontier.pop() {
            let current = elements[idx].clone();
            for g in &gens {
                let m = matrix_mul(g, &current.matrix);
                if !elements.iter().any(|e| e.matrix == m) {
                    elements.push(WeylElement { matrix: m, det: -current.det });
                    frontier.push(elements.len() - 1);
                }
            }
        }
        elements
    }

    fn check_invariants(&self) -> Result<()> {
        // <omega_i, alpha_j^> = delta_ij
        for (i, w) in self.fundamental_weights.iter().enumerate() {
            for (j, c) in self.simple_coroots.iter().enumerate() {
                let expect = i64::from(i == j);
                if pairing(&w.0, &c.0) != expect {
                    return Err(Error::Internal(
                        "fundamental weights are not dual to the simple coroots".into(),
                    ));
                }
            }
        }
        let expected_positive = match self.ty.family {
            Family::C => self.ty.semisimple_rank * self.ty.semisimple_rank,
            Family::AGl => self.ty.semisimple_rank * (self.ty.semisimple_rank + 1) / 2,
            Family::Torus => 0,
            Family::Sp2Blocks => self.ty.semisimple_rank,
        };
        if self.positive_roots.len() != expected_positive {
            return Err(Error::Internal(format!(
                "expected {} positive roots, found {}",
                expected_positive,
                self.positive_roots.len()
            )));
        }
        Ok(())
    }

    pub fn cartan_type(&self) -> CartanType {
        self.ty
    }

    pub fn lattice_rank(&self) -> usize {
        self.ty.lattice_rank
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Coweight] {
        &self.simple_coroots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    pub fn fundamental_weights(&self) -> &[Weight] {
        &self.fundamental_weights
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    /// The doubled Weyl vector 2*rho (the sum of the positive roots).
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// The sum of the positive coroots; pairing against it gives twice the
    /// height of a root-lattice element.
    pub fn coroot_sum(&self) -> &Coweight {
        &self.coroot_sum
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn check_rank(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.ty.lattice_rank {
            return Err(Error::RankMismatch {
                expected: self.ty.lattice_rank,
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn is_dominant(&self, x: &Weight) -> Result<bool> {
        self.check_rank(&x.0)?;
        Ok(self
            .simple_coroots
            .iter()
            .all(|c| pairing(&x.0, &c.0) >= 0))
    }

    /// Serre's partial order: x <= y iff y - x is a non-negative integer
    /// combination of positive roots. For the torus this degenerates to
    /// equality.
    pub fn dominance_leq(&self, x: &Weight, y: &Weight) -> Result<bool> {
        self.check_rank(&x.0)?;
        self.check_rank(&y.0)?;
        if self.ty.family == Family::Torus {
            return Ok(x == y);
        }
        let diff = vec_sub(&y.0, &x.0);
        match self.simple_root_coords(&diff) {
            Some(coords) => Ok(linalg::all_nonneg_integers(&coords)),
            None => Ok(false),
        }
    }

    /// Monoid/group generators of the dominant cone X^+.
    pub fn dominant_generators(&self) -> Vec<Weight> {
        let t = self.ty.lattice_rank;
        match self.ty.family {
            Family::C | Family::Sp2Blocks => self.fundamental_weights.clone(),
            Family::AGl => {
                let mut gens = self.fundamental_weights.clone();
                gens.push(Weight(vec![1; t]));
                gens.push(Weight(vec![-1; t]));
                gens
            }
            Family::Torus => {
                let mut gens = Vec::new();
                for i in 0..t {
                    let mut v = vec![0; t];
                    v[i] = 1;
                    gens.push(Weight(v.clone()));
                    v[i] = -1;
                    gens.push(Weight(v));
                }
                gens
            }
        }
    }

    /// Conjugate `v` into the dominant chamber by simple reflections.
    pub fn dominant_conjugate(&self, v: &[i64]) -> Vec<i64> {
        let (w, _) = self.dominant_conjugate_signed(v);
        w
    }

    /// Conjugate into the dominant chamber, tracking the determinant of the
    /// Weyl element used; the sign is 0 when `v` lies on a chamber wall.
    pub fn dominant_conjugate_signed(&self, v: &[i64]) -> (Vec<i64>, i8) {
        let mut v = v.to_vec();
        let mut sign = 1i8;
        loop {
            let mut moved = false;
            for i in 0..self.simple_roots.len() {
                if pairing(&v, &self.simple_coroots[i].0) < 0 {
                    v = self.reflect_weight(i, &v);
                    sign = -sign;
                    moved = true;
                }
            }
            if !moved {
                break;
            }
        }
        if self
            .simple_coroots
            .iter()
            .any(|c| pairing(&v, &c.0) == 0)
        {
            sign = 0;
        }
        (v, sign)
    }

    /// Coordinates of a weight in the basis used by the "fund" text format:
    /// fundamental-weight coordinates, plus the determinant exponent for the
    /// GL lattice; the epsilon basis itself for tori.
    pub fn fundamental_coords(&self, x: &Weight) -> Result<Vec<i64>> {
        self.check_rank(&x.0)?;
        match self.ty.family {
            Family::Torus => Ok(x.0.clone()),
            Family::C | Family::Sp2Blocks => Ok(self
                .simple_coroots
                .iter()
                .map(|c| pairing(&x.0, &c.0))
                .collect()),
            Family::AGl => {
                let mut coords: Vec<i64> = self
                    .simple_coroots
                    .iter()
                    .map(|c| pairing(&x.0, &c.0))
                    .collect();
                coords.push(x.0[self.ty.lattice_rank - 1]);
                Ok(coords)
            }
        }
    }

    /// Inverse of [`fundamental_coords`].
    pub fn from_fundamental(&self, coords: &[i64]) -> Result<Weight> {
        let t = self.ty.lattice_rank;
        match self.ty.family {
            Family::Torus => {
                if coords.len() != t {
                    return Err(Error::RankMismatch { expected: t, got: coords.len() });
                }
                Ok(Weight(coords.to_vec()))
            }
            Family::C | Family::Sp2Blocks => {
                if coords.len() != self.fundamental_weights.len() {
                    return Err(Error::RankMismatch {
                        expected: self.fundamental_weights.len(),
                        got: coords.len(),
                    });
                }
                let mut v = vec![0; t];
                for (a, w) in coords.iter().zip(&self.fundamental_weights) {
                    for (vi, wi) in v.iter_mut().zip(&w.0) {
                        *vi += a * wi;
                    }
                }
                Ok(Weight(v))
            }
            Family::AGl => {
                if coords.len() != t {
                    return Err(Error::RankMismatch { expected: t, got: coords.len() });
                }
                let mut v = vec![coords[t - 1]; t];
                for (a, w) in coords[..t - 1].iter().zip(&self.fundamental_weights) {
                    for (vi, wi) in v.iter_mut().zip(&w.0) {
                        *vi += a * wi;
                    }
                }
                Ok(Weight(v))
            }
        }
    }
}

fn basis_diff(t: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; t];
    v[i] = 1;
    v[j] = -1;
    v
}

/// Find the unique Weyl element `w` such that `w o (-iota_star)` preserves the
/// dominant chamber.
pub fn duality_involution(
    rs: &RootSystem,
    iota_star: Vec<Vec<i64>>,
) -> Result<InvolutionSpec> {
    let t = rs.lattice_rank();
    if iota_star.len() != t || iota_star.iter().any(|row| row.len() != t) {
        return Err(Error::RankMismatch { expected: t, got: iota_star.len() });
    }
    if matrix_mul(&iota_star, &iota_star) != identity_matrix(t) {
        return Err(Error::InvalidInvolution("matrix does not square to identity".into()));
    }
    // iota_star must permute the roots (vacuous for the torus).
    for root in rs.positive_roots() {
        let image = apply_matrix(&iota_star, &root.0);
        let neg: Vec<i64> = image.iter().map(|&c| -c).collect();
        let is_root = rs.positive_roots().iter().any(|r| r.0 == image || r.0 == neg);
        if !is_root {
            return Err(Error::InvalidInvolution(
                "matrix does not permute the roots".into(),
            ));
        }
    }
    let minus_iota = matrix_neg(&iota_star);
    let gens = rs.dominant_generators();
    let mut matches = Vec::new();
    for w in rs.weyl() {
        let m = matrix_mul(&w.matrix, &minus_iota);
        let preserves = gens.iter().all(|g| {
            let img = Weight(apply_matrix(&m, &g.0));
            rs.is_dominant(&img).unwrap_or(false)
        });
        if preserves {
            matches.push(w.clone());
        }
    }
    match matches.len() {
        1 => Ok(InvolutionSpec { iota_star, w_iota: matches.pop().unwrap() }),
        0 => Err(Error::Internal("no Weyl element aligns the duality".into())),
        _ => Err(Error::Internal("duality Weyl element is not unique".into())),
    }
}

/// Highest weight of the twisted dual of the irreducible with highest weight
/// `x`: the image of `x` under `-w_iota o iota_star`.
pub fn dual_dominant_weight(
    rs: &RootSystem,
    inv: &InvolutionSpec,
    x: &Weight,
) -> Result<Weight> {
    if !rs.is_dominant(x)? {
        return Err(Error::NotDominant);
    }
    let twisted = apply_matrix(&inv.iota_star, &x.0);
    let moved = inv.w_iota.apply(&twisted);
    let dual = Weight(moved.iter().map(|&c| -c).collect());
    debug_assert!(rs.is_dominant(&dual).unwrap_or(false));
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> RootSystem {
        RootSystem::new(CartanType::c(n).unwrap()).unwrap()
    }

    #[test]
    fn c1_data() {
        let rs = c(1);
        assert_eq!(rs.positive_roots().len(), 1);
        assert_eq!(rs.fundamental_weights()[0], Weight(vec![1]));
    }

    #[test]
    fn c2_data() {
        let rs = c(2);
        assert_eq!(rs.positive_roots().len(), 4);
        assert_eq!(rs.fundamental_weights()[0], Weight(vec![1, 0]));
        assert_eq!(rs.fundamental_weights()[1], Weight(vec![1, 1]));
        assert_eq!(rs.weyl_order(), 8);
    }

    #[test]
    fn c3_coroot_sum() {
        let rs = c(3);
        assert_eq!(rs.positive_roots().len(), 9);
        assert_eq!(rs.weyl_order(), 48);
        // <omega_1, h> = 2n - 1
        assert_eq!(pairing(&rs.fundamental_weights()[0].0, &rs.coroot_sum().0), 5);
    }

    #[test]
    fn a_gl_and_torus_orders() {
        let rs = RootSystem::new(CartanType::a_gl(3).unwrap()).unwrap();
        assert_eq!(rs.positive_roots().len(), 3);
        assert_eq!(rs.weyl_order(), 6);
        let torus = RootSystem::new(CartanType::torus(4).unwrap()).unwrap();
        assert_eq!(torus.weyl_order(), 1);
        assert!(torus.positive_roots().is_empty());
    }

    #[test]
    fn weyl_permutes_roots() {
        for rs in [c(2), c(3), RootSystem::new(CartanType::a_gl(3).unwrap()).unwrap()] {
            let mut all_roots: Vec<Vec<i64>> = rs
                .positive_roots()
                .iter()
                .map(|r| r.0.clone())
                .collect();
            let negs: Vec<Vec<i64>> = all_roots
                .iter()
                .map(|r| r.iter().map(|&c| -c).collect())
                .collect();
            all_roots.extend(negs);
            for w in rs.weyl() {
                for root in &all_roots {
                    let img = w.apply(root);
                    assert!(all_roots.contains(&img));
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let rs2 = c(2);
        let rs3 = c(3);
        let zero2 = Weight::zero(2);
        assert!(rs2.is_dominant(&zero2).unwrap());
        let w1 = rs2.fundamental_weights()[0].clone();
        assert!(rs2.is_dominant(&w1).unwrap());
        assert!(!rs2.is_dominant(&w1.neg()).unwrap());
        // reflexivity
        assert!(rs2.dominance_leq(&w1, &w1).unwrap());
        // omega_1 <= omega_3 in C_3
        let o1 = rs3.fundamental_weights()[0].clone();
        let o3 = rs3.fundamental_weights()[2].clone();
        assert!(rs3.dominance_leq(&o1, &o3).unwrap());
        // omega_1 vs omega_2 in C_2: difference needs coefficient 1/2
        let o2 = rs2.fundamental_weights()[1].clone();
        assert!(!rs2.dominance_leq(&w1, &o2).unwrap());
    }

    #[test]
    fn duality_sp_is_minus_identity() {
        for n in 1..=3 {
            let rs = c(n);
            let inv = duality_involution(&rs, identity_matrix(n)).unwrap();
            assert_eq!(inv.w_iota.matrix, matrix_neg(&identity_matrix(n)));
            let x = rs.fundamental_weights()[n - 1].clone();
            assert_eq!(dual_dominant_weight(&rs, &inv, &x).unwrap(), x);
        }
    }

    #[test]
    fn duality_torus_inversion_is_identity() {
        let rs = RootSystem::new(CartanType::torus(3).unwrap()).unwrap();
        let minus = matrix_neg(&identity_matrix(3));
        let inv = duality_involution(&rs, minus).unwrap();
        assert_eq!(inv.w_iota.matrix, identity_matrix(3));
        let x = Weight(vec![2, -1, 5]);
        assert_eq!(dual_dominant_weight(&rs, &inv, &x).unwrap(), x);
        // trivial involution on the torus: dual is -x, only 0 is dominant-stable
        let triv = duality_involution(&rs, identity_matrix(3)).unwrap();
        assert_eq!(
            dual_dominant_weight(&rs, &triv, &x).unwrap(),
            Weight(vec![-2, 1, -5])
        );
    }

    #[test]
    fn duality_gl_transpose_inverse() {
        let rs = RootSystem::new(CartanType::a_gl(4).unwrap()).unwrap();
        let minus = matrix_neg(&identity_matrix(4));
        let inv = duality_involution(&rs, minus).unwrap();
        assert_eq!(inv.w_iota.matrix, identity_matrix(4));
    }

    #[test]
    fn dual_is_involution() {
        let rs = c(3);
        let inv = duality_involution(&rs, identity_matrix(3)).unwrap();
        for a in 0..3 {
            for b in 0..2 {
                let x = rs.from_fundamental(&[a, b, 1]).unwrap();
                let d = dual_dominant_weight(&rs, &inv, &x).unwrap();
                assert_eq!(dual_dominant_weight(&rs, &inv, &d).unwrap(), x);
            }
        }
    }

    #[test]
    fn fundamental_coords_roundtrip() {
        let rs = c(3);
        let x = rs.from_fundamental(&[2, 0, 3]).unwrap();
        assert_eq!(x, Weight(vec![5, 3, 3]));
        assert_eq!(rs.fundamental_coords(&x).unwrap(), vec![2, 0, 3]);
        let gl = RootSystem::new(CartanType::a_gl(3).unwrap()).unwrap();
        let y = gl.from_fundamental(&[1, 1, -2]).unwrap();
        assert_eq!(gl.fundamental_coords(&y).unwrap(), vec![1, 1, -2]);
    }

    #[test]
    fn parse_types() {
        assert_eq!(CartanType::parse("C3").unwrap(), CartanType::c(3).unwrap());
        assert_eq!(CartanType::parse("A2gl").unwrap(), CartanType::a_gl(3).unwrap());
        assert_eq!(CartanType::parse("T4").unwrap(), CartanType::torus(4).unwrap());
        assert_eq!(
            CartanType::parse("C1x2").unwrap(),
            CartanType::sp2_blocks(2).unwrap()
        );
        assert!(CartanType::parse("C0").is_err());
        assert!(CartanType::parse("B2").is_err());
    }

    #[test]
    fn rank_cap_enforced() {
        assert!(RootSystem::with_rank_cap(CartanType::c(4).unwrap(), 3).is_err());
        // tori are exempt
        assert!(RootSystem::with_rank_cap(CartanType::torus(9).unwrap(), 3).is_ok());
    }
}
