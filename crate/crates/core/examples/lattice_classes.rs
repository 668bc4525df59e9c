//! Canonical forms of lattice classes: a scrambled basis, a homothety, and
//! the action of a diagonal matrix on the standard vertex.
//!
//!     cargo run --example lattice_classes

use btquot::building::{Building, LaurentScalar, LocalScalar};

fn main() {
    let b = Building::new(3, 3, 6).unwrap();
    let s = |c: &[u64]| b.scalar(c);

    // columns (π, 0, 0), (1 + 2π, π^2, 0), (2, 1, 1): type 3 ≡ 0
    let basis = vec![
        vec![s(&[0, 1]), s(&[1, 2]), s(&[2])],
        vec![s(&[]), s(&[0, 0, 1]), s(&[1])],
        vec![s(&[]), s(&[]), s(&[1])],
    ];
    let v = b.canonical_form(&basis).unwrap();
    println!("class {v:?}");
    println!(
        "  exponents {:?}, type {}, label {}",
        v.exponents(),
        v.vertex_type(),
        v.label()
    );

    // mix the columns: new column 0 = column 0 + (2 + π) column 2
    let mut mixed = basis.clone();
    for row in mixed.iter_mut() {
        let extra: Vec<u64> = mul3(&[2, 1], row[2].coeffs());
        let sum: Vec<u64> = add3(&extra, row[0].coeffs());
        row[0] = b.scalar(&sum);
    }
    println!(
        "  after a column operation: same class = {}",
        b.canonical_form(&mixed).unwrap() == v
    );

    let scaled: Vec<Vec<LocalScalar>> = basis
        .iter()
        .map(|row| row.iter().map(|x| b.scalar(&shift(x.coeffs()))).collect())
        .collect();
    println!(
        "  after scaling by π: same class = {}",
        b.canonical_form(&scaled).unwrap() == v
    );

    let g = vec![
        vec![
            LaurentScalar::pi_power(1),
            LaurentScalar::zero(),
            LaurentScalar::zero(),
        ],
        vec![
            LaurentScalar::zero(),
            LaurentScalar::constant(1),
            LaurentScalar::zero(),
        ],
        vec![
            LaurentScalar::zero(),
            LaurentScalar::zero(),
            LaurentScalar::constant(1),
        ],
    ];
    let w = b.apply_gl(&g, &b.standard_vertex()).unwrap();
    println!("diag(π, 1, 1) · standard = {w:?}, type {}", w.vertex_type());
    let neighbors = b.neighbors(&b.standard_vertex()).unwrap();
    println!(
        "  one of the {} neighbors of the standard vertex: {}",
        neighbors.len(),
        neighbors.contains(&w)
    );
}

fn add3(a: &[u64], b: &[u32]) -> Vec<u64> {
    (0..a.len().max(b.len()))
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0) as u64) % 3)
        .collect()
}

fn mul3(a: &[u64], b: &[u32]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y as u64) % 3;
        }
    }
    out
}

fn shift(a: &[u32]) -> Vec<u64> {
    std::iter::once(0)
        .chain(a.iter().map(|&c| c as u64))
        .collect()
}
