//! Lower bounds on the halting probability of the prefix machine.
//!
//! Run with `--release`; the last horizons enumerate a few million programs.

use ait_core::bits;
use ait_core::prefix::{estimate_h, kraft_sum_of, lift_to_prefix, omega_estimate};

fn main() {
    let words = [bits("0"), bits("10"), bits("110")];
    println!(
        "Kraft sum of {{0, 10, 110}}: {}",
        kraft_sum_of(&words).unwrap()
    );
    println!(
        "{{0, 01}} is not prefix-free: {:?}",
        kraft_sum_of(&[bits("0"), bits("01")]).err()
    );

    let q = bits("10110");
    println!("\nframe of {q}: {}", lift_to_prefix(&q).framed);
    let h = estimate_h(&bits("0110"), 64).unwrap();
    println!("Ĥ(0110) ≤ {} via {}", h.bound(), h.witness());

    println!("\nhorizon  programs  bound");
    for horizon in (8..=28).step_by(4) {
        let o = omega_estimate(horizon);
        println!(
            "{horizon:>7}  {:>8}  0.{}...  = {}",
            o.contributing,
            o.digits(16),
            o.value
        );
    }
}
