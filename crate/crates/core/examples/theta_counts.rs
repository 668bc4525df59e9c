//! Numbers of i-simplices θ_i in the quotient, for two degree-one places and
//! for a few other ramification patterns.
//!
//!     cargo run --example theta_counts

use btquot::arithmetic::{theta, RamificationData};

fn show(q: u64, n: u32, degrees: &[u32]) {
    match theta(&RamificationData::new(q, n, degrees)) {
        Ok(t) => {
            let values: Vec<String> = t.theta.iter().map(|x| x.to_string()).collect();
            println!(
                "n = {n}, q = {q}, degrees {degrees:?}: ({})",
                values.join(", ")
            );
        }
        Err(e) => println!("n = {n}, q = {q}, degrees {degrees:?}: {e}"),
    }
}

fn main() {
    for n in [2, 3, 5, 7] {
        for q in [2, 3, 4] {
            show(q, n, &[1, 1]);
        }
    }
    show(3, 3, &[1, 2]);
    show(2, 3, &[1, 3]);
    show(5, 2, &[1, 1, 2, 2]);
    show(2, 5, &[1, 2, 3]);
}
