//! Optimal embedding numbers of F_{q^n}[T] into a maximal order, and which
//! constant field extensions embed into the division algebra.
//!
//!     cargo run --example embedding_numbers

use btquot::arithmetic::{embedding_numbers, RamificationData};

fn main() {
    let cases: &[(u32, &[u32])] = &[
        (3, &[1, 1]),
        (3, &[1, 3]),
        (3, &[2, 4]),
        (5, &[1, 1]),
        (5, &[1, 2, 5]),
        (7, &[1, 1, 1]),
    ];
    for &(n, degrees) in cases {
        let e = embedding_numbers(&RamificationData::new(3, n, degrees)).unwrap();
        let local: Vec<String> = e.local_m.iter().map(|x| x.to_string()).collect();
        let fields: Vec<String> = e
            .subfields
            .iter()
            .map(|(m, ok)| format!("F_q^{m} {}", if *ok { "embeds" } else { "does not embed" }))
            .collect();
        println!(
            "n = {n}, degrees {degrees:?}: local m = [{}], m(B) = {}, W = {}; {}",
            local.join(", "),
            e.m_b,
            e.w,
            fields.join(", ")
        );
    }
}
