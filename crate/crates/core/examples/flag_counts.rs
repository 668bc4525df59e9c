//! Counts the i-simplices at a vertex of the building three ways: by
//! enumerating lattice chains, from the q-multinomial formula, and by
//! counting flags of actual subspaces of F_p^n.
//!
//!     cargo run --example flag_counts

use btquot::building::Building;
use btquot::exactnum::BigInteger;
use btquot::qcombinatorics::{flag_count_oracle, flag_oracle_admits, vertex_degree};

fn main() {
    println!(
        "{:>2} {:>2} {:>2} {:>10} {:>10} {:>10}",
        "n", "p", "i", "building", "formula", "subspaces"
    );
    for (n, p) in [(2usize, 2u32), (2, 3), (2, 5), (3, 2), (3, 3), (4, 2)] {
        let b = Building::new(n, p, n + 2).unwrap();
        let v = b.standard_vertex();
        for i in 1..n {
            let enumerated = b.simplices_at(&v, i).unwrap().len();
            let formula = vertex_degree(n as u32, i as u32)
                .unwrap()
                .eval_int(&BigInteger::from(p));
            let oracle = if flag_oracle_admits(n as u32, p) {
                flag_count_oracle(n as u32, i as u32, p)
                    .unwrap()
                    .to_string()
            } else {
                "-".into()
            };
            println!("{n:>2} {p:>2} {i:>2} {enumerated:>10} {formula:>10} {oracle:>10}");
        }
    }
    println!("vertex_degree(3, 1) = {}", vertex_degree(3, 1).unwrap());
    println!("vertex_degree(3, 2) = {}", vertex_degree(3, 2).unwrap());
}
