//! Linear algebra over a prime field `F_p`: row-reduced echelon bases and
//! duplicate-free enumeration of subspaces of `F_p^n`.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} is not a prime")]
pub struct NotPrime(pub u32);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self, NotPrime> {
        if is_prime(p as u64) {
            Ok(Self { p })
        } else {
            Err(NotPrime(p))
        }
    }

    pub fn order(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    /// Inverse of a nonzero element (Fermat).
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero");
        let mut result = 1u64;
        let mut base = a as u64 % self.p as u64;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        result as u32
    }

    /// Reduced row echelon form of `rows`, with zero rows dropped.
    pub fn rref(&self, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut m: Vec<Vec<u32>> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = self.inv(m[rank][col]);
            for x in m[rank].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for r in 0..m.len() {
                if r != rank && m[r][col] != 0 {
                    let f = m[r][col];
                    for c in 0..ncols {
                        let t = self.mul(f, m[rank][c]);
                        m[r][c] = self.sub(m[r][c], t);
                    }
                }
            }
            rank += 1;
        }
        m.truncate(rank);
        m
    }
}

/// A subspace of `F_p^n`, stored by its reduced row echelon basis. Equal
/// subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    pub fn span(field: &PrimeField, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient));
        Self {
            ambient,
            basis: field.rref(vectors),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| (0..ambient).map(|j| u32::from(i == j)).collect())
            .collect();
        Self { ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn contains(&self, field: &PrimeField, other: &Subspace) -> bool {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        field.rref(&rows).len() == self.dim()
    }

    /// All subspaces of `self` of dimension `k`, each exactly once.
    pub fn subspaces_of_dim(&self, field: &PrimeField, k: usize) -> Vec<Subspace> {
        echelon_matrices(field.order(), self.dim(), k)
            .into_iter()
            .map(|coeffs| {
                let vectors: Vec<Vec<u32>> = coeffs
                    .iter()
                    .map(|c| combine(field, c, &self.basis, self.ambient))
                    .collect();
                Subspace::span(field, self.ambient, &vectors)
            })
            .collect()
    }

    /// All subspaces strictly between 0 and `self`.
    pub fn proper_nonzero_subspaces(&self, field: &PrimeField) -> Vec<Subspace> {
        (1..self.dim())
            .flat_map(|k| self.subspaces_of_dim(field, k))
            .collect()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace{:?}", self.basis)
    }
}

fn combine(field: &PrimeField, coeffs: &[u32], basis: &[Vec<u32>], ambient: usize) -> Vec<u32> {
    let mut out = vec![0u32; ambient];
    for (c, row) in coeffs.iter().zip(basis) {
        if *c == 0 {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o = field.add(*o, field.mul(*c, *x));
        }
    }
    out
}

/// Every `k x n` reduced row echelon matrix over `F_p` of full rank `k`.
pub fn echelon_matrices(p: u32, n: usize, k: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    choose_pivots(p, n, k, 0, &mut pivots, &mut out);
    out
}

fn choose_pivots(
    p: u32,
    n: usize,
    k: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<u32>>>,
) {
    if pivots.len() == k {
        fill_free_entries(p, n, pivots, out);
        return;
    }
    for c in start..n {
        pivots.push(c);
        choose_pivots(p, n, k, c + 1, pivots, out);
        pivots.pop();
    }
}

fn fill_free_entries(p: u32, n: usize, pivots: &[usize], out: &mut Vec<Vec<Vec<u32>>>) {
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..n {
            if !pivots.contains(&c) {
                free.push((r, c));
            }
        }
    }
    let mut template = vec![vec![0u32; n]; pivots.len()];
    for (r, &pc) in pivots.iter().enumerate() {
        template[r][pc] = 1;
    }
    let mut values = vec![0u32; free.len()];
    loop {
        let mut m = template.clone();
        for (&(r, c), &v) in free.iter().zip(&values) {
            m[r][c] = v;
        }
        out.push(m);
        // odometer increment
        let mut i = 0;
        loop {
            if i == values.len() {
                return;
            }
            values[i] += 1;
            if values[i] < p {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(7).is_ok());
        assert_eq!(PrimeField::new(4), Err(NotPrime(4)));
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn subspace_counts_small() {
        let f2 = PrimeField::new(2).unwrap();
        let v = Subspace::whole(2);
        assert_eq!(v.subspaces_of_dim(&f2, 1).len(), 3);
        let v4 = Subspace::whole(4);
        assert_eq!(v4.subspaces_of_dim(&f2, 2).len(), 35);
        assert_eq!(v4.proper_nonzero_subspaces(&f2).len(), 15 + 35 + 15);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let f3 = PrimeField::new(3).unwrap();
        let subs = Subspace::whole(3).subspaces_of_dim(&f3, 2);
        let set: std::collections::HashSet<_> = subs.iter().cloned().collect();
        assert_eq!(set.len(), subs.len());
        assert_eq!(subs.len(), 13);
    }

    #[test]
    fn subspaces_of_a_subspace_lie_inside_it() {
        let f2 = PrimeField::new(2).unwrap();
        let w = Subspace::span(
            &f2,
            4,
            &[vec![1, 1, 0, 0], vec![0, 0, 1, 1], vec![1, 0, 1, 0]],
        );
        assert_eq!(w.dim(), 3);
        for s in w.proper_nonzero_subspaces(&f2) {
            assert!(w.contains(&f2, &s));
            assert!(s.dim() < 3);
        }
    }
}
