//! Crossing sequences of the zig-zag palindrome machine and its quadratic
//! running time.

use ait_core::bits;
use ait_core::tmprofiler::{
    crossing_sequences, injectivity_probe, quadratic_report, run_palindrome_tm,
};

fn main() {
    let x = bits("01100110");
    let t = run_palindrome_tm(&x);
    println!("{x}: accepted {} in {} steps", t.accepted, t.steps);
    for cs in crossing_sequences(&t) {
        let states: Vec<String> = cs.states.iter().map(ToString::to_string).collect();
        println!(
            "  boundary {:>2}: {:>2} crossings  {}",
            cs.cell,
            states.len(),
            states.join(" ")
        );
    }

    for n in 1..=8 {
        let verdict = match injectivity_probe(n) {
            None => "prefix determined by crossing sequence".to_string(),
            Some((i, a, b)) => format!("collision at i = {i}: {a} / {b}"),
        };
        println!("x x^R, |x| = {n}: {verdict}");
    }

    let r = quadratic_report(&[64, 128, 256, 512, 1024], 20, 7).unwrap();
    println!();
    for row in &r.rows {
        let ratio = row
            .ratio_to_previous
            .map_or(String::new(), |q| format!("  x{q:.2}"));
        println!("n {:>5}  mean T {:>10.1}{ratio}", row.n, row.mean_steps);
    }
    println!("log-log slope {:.3}", r.slope.unwrap());
}
