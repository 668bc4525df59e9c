//! Quotients of simplicial complexes by finite group actions, checking
//! χ(G\X) = χ(X)/#G + Σ_i (-1)^i Σ_{orbits of i-simplices} (1 - 1/#G_s).
//!
//!     cargo run --example quotient_euler [cases]

use btquot::simplicial::random::random_admissible_case;
use btquot::simplicial::{euler_characteristic, quotient, quotient_euler_check};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let cases: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..cases {
        let case = random_admissible_case(&mut rng, 12, 40);
        let q = quotient(&case.complex, &case.action).unwrap();
        let check = quotient_euler_check(&case.complex, &case.action).unwrap();
        let stabilizers: Vec<Vec<usize>> = q
            .orbits
            .iter()
            .map(|layer| layer.iter().map(|o| o.stabilizer_order).collect())
            .collect();
        println!(
            "case {k:2}: group {:<8} X counts {:?}, χ(X) = {}, quotient counts {:?}, χ = {}, formula {} ({}); stabilizers {:?}",
            case.group,
            case.complex.counts(),
            euler_characteristic(&case.complex),
            q.quotient.counts(),
            check.lhs,
            check.rhs,
            if check.equal { "agrees" } else { "DISAGREES" },
            stabilizers
        );
    }
}
