//! Checks `Σ_p (-1)^ℓ(p) / ℓ(p) · [n; p]_q = (-1)^n / n · [n-1]_q` over all
//! compositions `p` of `n`, as an identity of rational functions in q.
//!
//!     cargo run --example andrews_identity [max_n]

use btquot::qcombinatorics::{andrews_check, compositions};

fn main() {
    let max_n: u32 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    for n in 1..=max_n {
        let r = andrews_check(n).unwrap();
        println!(
            "n = {n:2}  {:4} compositions  {}  rhs = {}",
            compositions(n, None).len(),
            if r.equal { "equal" } else { "DIFFERENT" },
            r.rhs
        );
    }
}
