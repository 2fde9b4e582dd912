//! Streams halting events of the universal machine in stage order, then
//! recovers a level set of K̂ from its size alone.

use ait_core::bits::BitString;
use ait_core::complexity::estimate_k;
use ait_core::dovetail::{reconstruct_level_set, sweep};

fn main() {
    let horizon = 7;
    let mut count = 0;
    for ev in sweep(horizon) {
        if count < 12 {
            println!(
                "{:>8} -> {:<8} after {} steps",
                ev.program.to_string(),
                ev.output.to_string(),
                ev.steps
            );
        }
        count += 1;
    }
    println!("... {count} halting programs up to horizon {horizon}");

    // strings of length ≤ 3 with K̂ ≤ 3, knowing only that there are m of them
    let domain: Vec<BitString> = BitString::all_up_to(3).collect();
    let m = domain
        .iter()
        .filter(|x| estimate_k(x, 64).is_ok_and(|e| e.bound() <= 3))
        .count();
    let found = reconstruct_level_set(
        3,
        m,
        &domain,
        |t, x| estimate_k(x, t).ok().map(|e| e.bound()),
        Some(256),
    )
    .expect("m is the true size");
    let shown: Vec<String> = found.iter().map(|x| format!("{x:?}")).collect();
    println!(
        "\nlevel set K̂ ≤ 3 among {} strings (m = {m}): {}",
        domain.len(),
        shown.join(" ")
    );
}
