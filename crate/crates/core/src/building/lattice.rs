//! Echelon normal form of lattices over `O / pi^N` and the canonical
//! representative of a homothety class.

use std::fmt;

use sha2::{Digest, Sha256};

use super::local::{self, LocalScalar, Poly};
use crate::fqspace::PrimeField;

/// Canonical representative of a homothety class of `O`-lattices in `K^n`.
///
/// The basis matrix is upper triangular with columns as basis vectors.
/// Diagonal entry `i` is `pi^{d_i}`; the entry in row `i` above the
/// diagonal has degree `< d_i`. Some entry of the matrix is a unit, so the
/// lattice lies in `O^n` but not in `pi O^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeClass {
    pub(crate) n: usize,
    pub(crate) p: u32,
    pub(crate) exps: Vec<usize>,
    /// Row-major; `entries[i][j]` for `j > i` holds the off-diagonal
    /// coefficients, everything else is empty.
    pub(crate) entries: Vec<Vec<Poly>>,
}

impl LatticeClass {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Diagonal exponents `d_1, ..., d_n`.
    pub fn exponents(&self) -> &[usize] {
        &self.exps
    }

    /// `Σ d_i mod n`.
    pub fn vertex_type(&self) -> usize {
        self.exps.iter().sum::<usize>() % self.n
    }

    /// Coefficients of the basis matrix entry in row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> Vec<u32> {
        if i == j {
            local::monomial(self.exps[i])
        } else {
            self.entries[i][j].clone()
        }
    }

    /// The canonical basis matrix, row-major, columns spanning the lattice.
    pub fn basis(&self) -> Vec<Vec<LocalScalar>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| LocalScalar {
                        coeffs: self.entry(i, j),
                    })
                    .collect()
            })
            .collect()
    }

    /// Basis vectors (matrix columns) as exact polynomials in `pi`.
    pub(crate) fn columns(&self) -> Vec<Vec<Poly>> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.entry(i, j)).collect())
            .collect()
    }

    pub(crate) fn max_exponent(&self) -> usize {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// Comma-joined exponents followed by a short digest of the
    /// off-diagonal part, e.g. `1,0#3fa2c1d0`.
    pub fn label(&self) -> String {
        let mut hasher = Sha256::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let e = &self.entries[i][j];
                hasher.update((e.len() as u32).to_le_bytes());
                for c in e {
                    hasher.update(c.to_le_bytes());
                }
            }
        }
        let digest = hasher.finalize();
        let exps: Vec<String> = self.exps.iter().map(|d| d.to_string()).collect();
        let hex: String = digest[..4].iter().map(|b| format!("{b:02x}")).collect();
        format!("{}#{}", exps.join(","), hex)
    }
}

impl fmt::Debug for LatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeClass[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", render(&self.entry(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

fn render(a: &[u32]) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "π".into(),
            (1, c) => format!("{c}π"),
            (k, 1) => format!("π^{k}"),
            (k, c) => format!("{c}π^{k}"),
        })
        .collect();
    terms.join("+")
}

/// Upper-triangular echelon form of `span(gens) + pi^prec O^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Echelon {
    pub exps: Vec<usize>,
    /// `cols[j][i]`: row `i` of basis vector `j`.
    pub cols: Vec<Vec<Poly>>,
}

pub(crate) fn echelon(f: &PrimeField, n: usize, gens: &[Vec<Poly>], prec: usize) -> Echelon {
    let mut gens: Vec<Vec<Poly>> = gens
        .iter()
        .map(|g| g.iter().map(|x| local::truncate(x.clone(), prec)).collect())
        .filter(|g: &Vec<Poly>| g.iter().any(|x| !x.is_empty()))
        .collect();
    let mut exps = vec![prec; n];
    let mut cols = vec![vec![Vec::new(); n]; n];

    for r in (0..n).rev() {
        let pivot = gens
            .iter()
            .enumerate()
            .filter_map(|(k, g)| local::valuation(&g[r]).map(|v| (v, k)))
            .min();
        let Some((v, k)) = pivot else {
            continue;
        };
        let mut c = gens.swap_remove(k);
        let unit = local::shift_down(&c[r], v);
        let inv = local::unit_inverse(f, &unit, prec);
        for x in c.iter_mut().take(r) {
            *x = local::mul_trunc(f, x, &inv, prec);
        }
        c[r] = local::monomial(v);
        for g in gens.iter_mut() {
            if g[r].is_empty() {
                continue;
            }
            let t = local::shift_down(&g[r], v);
            for row in 0..r {
                let prod = local::mul_trunc(f, &t, &c[row], prec);
                g[row] = local::sub(f, &g[row], &prod);
            }
            g[r] = Vec::new();
        }
        if v > 0 {
            // pi^{prec - v} c has pi^prec in row r, so only its upper rows survive
            let ann: Vec<Poly> = c
                .iter()
                .take(r)
                .map(|x| local::truncate(local::shift_up(x, prec - v), prec))
                .chain(std::iter::repeat(Vec::new()).take(n - r))
                .collect();
            gens.push(ann);
        }
        gens.retain(|g| g.iter().any(|x| !x.is_empty()));
        exps[r] = v;
        cols[r] = c;
    }

    for j in 0..n {
        for i in (0..j).rev() {
            let high = local::shift_down(&cols[j][i], exps[i]);
            if high.is_empty() {
                continue;
            }
            for row in 0..=i {
                let prod = if row == i {
                    local::shift_up(&high, exps[i])
                } else {
                    local::mul_trunc(f, &high, &cols[i][row], prec)
                };
                cols[j][row] = local::sub(f, &cols[j][row], &prod);
            }
        }
    }
    Echelon { exps, cols }
}

/// Divides out the largest power of `pi` dividing the whole basis.
pub(crate) fn normalize(p: u32, e: &Echelon) -> LatticeClass {
    let n = e.exps.len();
    let mut m = e.exps.iter().copied().min().unwrap_or(0);
    for j in 0..n {
        for i in 0..j {
            if let Some(v) = local::valuation(&e.cols[j][i]) {
                m = m.min(v);
            }
        }
    }
    let mut entries = vec![vec![Vec::new(); n]; n];
    for (j, col) in e.cols.iter().enumerate() {
        for (i, row) in entries.iter_mut().enumerate().take(j) {
            row[j] = local::shift_down(&col[i], m);
        }
    }
    LatticeClass {
        n,
        p,
        exps: e.exps.iter().map(|d| d - m).collect(),
        entries,
    }
}
