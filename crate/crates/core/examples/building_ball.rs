//! Enumerates the ball of radius r around the standard vertex of the
//! building of PGL_n over F_p((π)) and prints it as a `simplicial v1` dump.
//!
//!     cargo run --example building_ball [n] [p] [r]

use btquot::building::Building;
use btquot::simplicial::euler_characteristic;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let n = *args.first().unwrap_or(&2);
    let p = *args.get(1).unwrap_or(&2) as u32;
    let r = *args.get(2).unwrap_or(&2);

    let b = Building::for_radius(n, p, r).expect("supported field");
    let ball = b.ball(&b.standard_vertex(), r).expect("within guard");
    let x = ball.complex();
    println!("# n = {n}, p = {p}, radius {r}");
    println!(
        "# simplex counts {:?}, euler characteristic {}",
        x.counts(),
        euler_characteristic(x)
    );
    for d in 0..=r {
        let shell = ball.distances().iter().filter(|&&k| k == d).count();
        println!("# distance {d}: {shell} vertices");
    }
    print!("{}", ball.to_dump());
}
