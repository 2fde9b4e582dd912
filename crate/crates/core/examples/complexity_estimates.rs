//! Upper bounds on plain, conditional and pair complexity, each with the
//! program that certifies it.

use ait_core::bits;
use ait_core::bits::BitString;
use ait_core::complexity::{estimate_k, estimate_k_cond, estimate_k_pair, info_estimate};

fn main() {
    let horizon = 256;
    let targets = [bits("1011"), BitString::zeros(40), bits("0110100110010110")];
    for x in &targets {
        let est = estimate_k(x, horizon).expect("identity always fits");
        assert!(est.replays());
        println!("K̂({x}) ≤ {} via {}", est.bound(), est.witness());
    }

    let (x, y) = (bits("110010"), bits("110010"));
    let cond = estimate_k_cond(&x, &y, horizon).unwrap();
    println!("\nK̂({x} | {y}) ≤ {} via {}", cond.bound(), cond.witness());
    let pair = estimate_k_pair(&bits("10"), &bits("01"), horizon).unwrap();
    println!("K̂(10, 01) ≤ {} via {}", pair.bound(), pair.witness());

    // staged estimates only ever go down
    let x = BitString::zeros(24);
    let stages: Vec<String> = [4, 8, 16, 32, 64]
        .iter()
        .map(|&h| estimate_k(&x, h).map_or("-".into(), |e| e.bound().to_string()))
        .collect();
    println!(
        "\nK̂(0^24) at horizons 4, 8, 16, 32, 64: {}",
        stages.join(", ")
    );

    let info = info_estimate(&bits("1101"), &bits("1101"), horizon).unwrap();
    println!(
        "I(x : x) estimate {} (K̂ {} minus conditional {})",
        info.value,
        info.k_y.bound(),
        info.k_y_given_x.bound()
    );
}
