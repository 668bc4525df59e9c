//! Euler characteristics of quotients for a few ramification patterns,
//! numerically and as polynomials in q.
//!
//!     cargo run --example chi_formula

use btquot::arithmetic::{chi, chi_raw, chi_symbolic, RamificationData};
use btquot::exactnum::format_rational;

fn main() {
    let cases: &[(u32, &[u32])] = &[
        (2, &[1, 1]),
        (3, &[1, 1]),
        (3, &[1, 3]),
        (3, &[1, 2]),
        (5, &[1, 1, 1]),
    ];
    for &(n, degrees) in cases {
        let poly = chi_symbolic(n, degrees).expect("prime n");
        println!("n = {n}, degrees {degrees:?}: chi = {poly}");
        for q in [2, 3, 4, 5] {
            match chi(&RamificationData::new(q, n, degrees)) {
                Ok(r) => println!(
                    "  q = {q}: chi = {}, volume = {}, h = {:?}, chi = 1 mod q: {}",
                    r.chi,
                    format_rational(&r.volume),
                    r.h.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    r.congruence_ok
                ),
                Err(e) => println!("  q = {q}: {e}"),
            }
        }
    }

    // for composite n the same expression is usually not an integer
    for n in [4, 6] {
        let raw = chi_raw(&RamificationData::new(2, n, &[1, 1])).unwrap();
        println!(
            "n = {n}, q = 2, degrees [1, 1]: raw value {}",
            format_rational(&raw)
        );
    }
}
