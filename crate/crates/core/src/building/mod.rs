//! Finite pieces of the Bruhat–Tits building of `PGL_n(K)` for the local
//! field `K = F_p((pi))`: vertices are homothety classes of `O`-lattices in
//! `K^n`, simplices are chains `L_0 ⊋ L_1 ⊋ ... ⊋ L_i ⊋ pi L_0`.

mod ball;
mod lattice;
mod local;

use std::collections::HashMap;

use thiserror::Error;

use crate::fqspace::{is_prime, PrimeField, Subspace};

pub use ball::Ball;
pub use lattice::LatticeClass;
pub use local::{LaurentScalar, LocalScalar};

use lattice::{echelon, normalize};
use local::Poly;

/// Largest `p^n` accepted; neighbor enumeration walks all subspaces of
/// `F_p^n`.
pub const FIELD_SIZE_GUARD: u64 = 4096;

/// Largest estimated vertex count accepted by [`Building::ball`].
pub const BALL_VERTEX_GUARD: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildingError {
    #[error("residue field of order {0} is not supported (prime order required)")]
    UnsupportedField(u32),
    #[error("rank n = {0} must be at least 2")]
    RankTooSmall(usize),
    #[error("p^n = {p}^{n} exceeds the enumeration guard {FIELD_SIZE_GUARD}")]
    FieldTooLarge { n: usize, p: u32 },
    #[error("estimated {estimate} vertices exceeds the guard {BALL_VERTEX_GUARD}")]
    TooLarge { estimate: u64 },
    #[error("basis matrix is singular")]
    SingularBasis,
    #[error("lattice class does not fit in precision {0}")]
    PrecisionExceeded(usize),
    #[error("expected a {expected}x{expected} matrix")]
    DimensionMismatch { expected: usize },
    #[error("flag length {i} outside 1..={max}")]
    FlagLength { i: usize, max: usize },
    #[error("lattice class belongs to a different building")]
    ForeignVertex,
}

/// The building of `PGL_n(F_p((pi)))` together with a working precision `N`:
/// lattice classes are computed in `O / pi^N`, which is lossless for classes
/// whose elementary-divisor exponents stay below `N`.
#[derive(Debug, Clone)]
pub struct Building {
    n: usize,
    field: PrimeField,
    precision: usize,
}

impl Building {
    pub fn new(n: usize, p: u32, precision: usize) -> Result<Self, BuildingError> {
        if n < 2 {
            return Err(BuildingError::RankTooSmall(n));
        }
        if !is_prime(p as u64) {
            return Err(BuildingError::UnsupportedField(p));
        }
        let size = (p as u64).checked_pow(n as u32);
        if size.map_or(true, |s| s > FIELD_SIZE_GUARD) {
            return Err(BuildingError::FieldTooLarge { n, p });
        }
        let field = PrimeField::new(p).map_err(|_| BuildingError::UnsupportedField(p))?;
        Ok(Self {
            n,
            field,
            precision: precision.max(1),
        })
    }

    /// Precision adequate for a ball of radius `r` around the standard vertex.
    pub fn for_radius(n: usize, p: u32, r: usize) -> Result<Self, BuildingError> {
        Self::new(n, p, r + n + 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.field.order()
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    /// Reduces coefficients mod `p` and truncates below `pi^N`.
    pub fn scalar(&self, coeffs: &[u64]) -> LocalScalar {
        let p = self.p() as u64;
        let c: Poly = coeffs.iter().map(|&x| (x % p) as u32).collect();
        LocalScalar {
            coeffs: local::truncate(c, self.precision),
        }
    }

    /// The class of `O^n`.
    pub fn standard_vertex(&self) -> LatticeClass {
        LatticeClass {
            n: self.n,
            p: self.p(),
            exps: vec![0; self.n],
            entries: vec![vec![Vec::new(); self.n]; self.n],
        }
    }

    /// Canonical representative of the lattice spanned by the columns of
    /// `basis` (row-major).
    pub fn canonical_form(
        &self,
        basis: &[Vec<LocalScalar>],
    ) -> Result<LatticeClass, BuildingError> {
        self.check_square(basis.len(), basis.iter().map(|r| r.len()))?;
        let cols: Vec<Vec<Poly>> = (0..self.n)
            .map(|j| (0..self.n).map(|i| basis[i][j].coeffs.clone()).collect())
            .collect();
        self.class_of_exact(&cols)
    }

    /// Class of the lattice spanned by `cols`, treating entries as exact
    /// polynomials in `pi`.
    fn class_of_exact(&self, cols: &[Vec<Poly>]) -> Result<LatticeClass, BuildingError> {
        let max_len = cols.iter().flatten().map(|x| x.len()).max().unwrap_or(0);
        // ord det <= n * max degree, so this precision sees the whole lattice
        let exact_prec = self.n * max_len + 2;
        let e = echelon(&self.field, self.n, cols, exact_prec);
        if e.exps.iter().sum::<usize>() >= exact_prec {
            return Err(BuildingError::SingularBasis);
        }
        let class = normalize(self.p(), &e);
        self.check_window(&class)?;
        Ok(class)
    }

    /// A class fits the window when recomputing it at `N` and `N + 1` agrees.
    fn check_window(&self, class: &LatticeClass) -> Result<(), BuildingError> {
        let cols = class.columns();
        let at = |prec| normalize(self.p(), &echelon(&self.field, self.n, &cols, prec));
        if class.max_exponent() >= self.precision
            || at(self.precision) != *class
            || at(self.precision + 1) != *class
        {
            return Err(BuildingError::PrecisionExceeded(self.precision));
        }
        Ok(())
    }

    /// Class of a lattice `M` with `pi L ⊆ M ⊆ L ⊆ O^n`, from generators.
    fn class_in_window(&self, gens: &[Vec<Poly>]) -> Result<LatticeClass, BuildingError> {
        let at = |prec| normalize(self.p(), &echelon(&self.field, self.n, gens, prec));
        let class = at(self.precision);
        if class.max_exponent() >= self.precision || at(self.precision + 1) != class {
            return Err(BuildingError::PrecisionExceeded(self.precision));
        }
        Ok(class)
    }

    fn check_square(
        &self,
        rows: usize,
        lens: impl Iterator<Item = usize>,
    ) -> Result<(), BuildingError> {
        let mut lens = lens;
        if rows != self.n || !lens.all(|l| l == self.n) {
            return Err(BuildingError::DimensionMismatch { expected: self.n });
        }
        Ok(())
    }

    fn check_vertex(&self, v: &LatticeClass) -> Result<(), BuildingError> {
        if v.n != self.n || v.p != self.p() {
            return Err(BuildingError::ForeignVertex);
        }
        Ok(())
    }

    /// Lattice `lift(W) + pi L` for a subspace `W` of `L / pi L`, written in
    /// the coordinates of the basis of `L`.
    fn sublattice(&self, v: &LatticeClass, w: &Subspace) -> Result<LatticeClass, BuildingError> {
        let f = &self.field;
        let basis = v.columns();
        let mut gens: Vec<Vec<Poly>> = Vec::new();
        for vec in w.basis() {
            let mut g = vec![Vec::new(); self.n];
            for (k, &c) in vec.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (row, x) in g.iter_mut().enumerate() {
                    *x = local::add(f, x, &local::scale(f, &basis[k][row], c));
                }
            }
            gens.push(g);
        }
        for b in &basis {
            gens.push(b.iter().map(|x| local::shift_up(x, 1)).collect());
        }
        self.class_in_window(&gens)
    }

    /// One neighbor per proper nonzero subspace of `v / pi v`.
    pub fn neighbors(&self, v: &LatticeClass) -> Result<Vec<LatticeClass>, BuildingError> {
        self.check_vertex(v)?;
        Subspace::whole(self.n)
            .proper_nonzero_subspaces(&self.field)
            .iter()
            .map(|w| self.sublattice(v, w))
            .collect()
    }

    /// One `i`-simplex per flag `V ⊋ F_1 ⊋ ... ⊋ F_i ⊋ 0` in `v / pi v`.
    /// Each simplex is returned as its sorted vertex set.
    pub fn simplices_at(
        &self,
        v: &LatticeClass,
        i: usize,
    ) -> Result<Vec<Vec<LatticeClass>>, BuildingError> {
        self.check_vertex(v)?;
        if i == 0 || i >= self.n {
            return Err(BuildingError::FlagLength { i, max: self.n - 1 });
        }
        let mut classes: HashMap<Subspace, LatticeClass> = HashMap::new();
        let mut out = Vec::new();
        let whole = Subspace::whole(self.n);
        let mut chain: Vec<Subspace> = Vec::new();
        self.extend_flags(v, &whole, i, &mut chain, &mut classes, &mut out)?;
        Ok(out)
    }

    fn extend_flags(
        &self,
        v: &LatticeClass,
        top: &Subspace,
        remaining: usize,
        chain: &mut Vec<Subspace>,
        classes: &mut HashMap<Subspace, LatticeClass>,
        out: &mut Vec<Vec<LatticeClass>>,
    ) -> Result<(), BuildingError> {
        if remaining == 0 {
            let mut simplex = vec![v.clone()];
            for w in chain.iter() {
                simplex.push(classes[w].clone());
            }
            simplex.sort();
            out.push(simplex);
            return Ok(());
        }
        // leave room for the rest of the flag below this subspace
        for w in top.proper_nonzero_subspaces(&self.field) {
            if w.dim() < remaining {
                continue;
            }
            if !classes.contains_key(&w) {
                let c = self.sublattice(v, &w)?;
                classes.insert(w.clone(), c);
            }
            chain.push(w.clone());
            self.extend_flags(v, &w, remaining - 1, chain, classes, out)?;
            chain.pop();
        }
        Ok(())
    }

    /// `Σ d_i mod n`.
    pub fn vertex_type(&self, v: &LatticeClass) -> usize {
        v.vertex_type()
    }

    /// Class of `g` applied to the basis of `v`.
    pub fn apply_gl(
        &self,
        g: &[Vec<LaurentScalar>],
        v: &LatticeClass,
    ) -> Result<LatticeClass, BuildingError> {
        self.check_vertex(v)?;
        self.check_square(g.len(), g.iter().map(|r| r.len()))?;
        let f = &self.field;
        let p = self.p();
        let reduce = |c: &[u32]| local::trim(c.iter().map(|x| x % p).collect());
        // homothety lets us clear the most negative power of pi
        let shift = g
            .iter()
            .flatten()
            .filter(|x| x.coeffs.iter().any(|&c| c % p != 0))
            .map(|x| x.shift)
            .min()
            .unwrap_or(0);
        let entries: Vec<Vec<Poly>> = g
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| local::shift_up(&reduce(&x.coeffs), (x.shift - shift).max(0) as usize))
                    .map(local::trim)
                    .collect()
            })
            .collect();
        let basis = v.columns();
        let cols: Vec<Vec<Poly>> = basis
            .iter()
            .map(|b| {
                (0..self.n)
                    .map(|i| {
                        (0..self.n).fold(Vec::new(), |acc, k| {
                            let prod = local::mul_trunc(f, &entries[i][k], &b[k], usize::MAX);
                            local::add(f, &acc, &prod)
                        })
                    })
                    .collect()
            })
            .collect();
        self.class_of_exact(&cols)
    }

    /// All vertices within edge distance `r` of `center`, with every simplex
    /// of the building spanned by them.
    pub fn ball(&self, center: &LatticeClass, r: usize) -> Result<Ball, BuildingError> {
        ball::build(self, center, r)
    }
}

/// `standard_vertex` for the default precision.
pub fn standard_vertex(n: usize, p: u32) -> Result<LatticeClass, BuildingError> {
    Ok(Building::new(n, p, n + 1)?.standard_vertex())
}

#[cfg(test)]
mod tests;
