//! The quotient for two ramified places of degree one: a segment for n = 2,
//! and for n = 3 a triangle boundary carrying q + 1 parallel 2-simplices.
//!
//!     cargo run --example multilayer_demo [q]

use btquot::arithmetic::{chi, multilayer_demo, theta, RamificationData};
use btquot::simplicial::{euler_characteristic, to_dump};

fn main() {
    let q: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    for n in [2, 3] {
        let x = multilayer_demo(n, q).unwrap();
        let data = RamificationData::new(q, n, &[1, 1]);
        let t: Vec<String> = theta(&data)
            .unwrap()
            .theta
            .iter()
            .map(|x| x.to_string())
            .collect();
        println!(
            "# n = {n}, q = {q}: counts {:?}, theta ({}), euler characteristic {}, chi formula {}",
            x.counts(),
            t.join(", "),
            euler_characteristic(&x),
            chi(&data).unwrap().chi
        );
        print!("{}", to_dump(&x));
    }
}
