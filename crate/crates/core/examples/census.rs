//! Counts compressible strings and profiles the deficiency of sequences.

use ait_core::census::{census, deficiency_profile};
use ait_core::randomness::SequenceSource;

fn main() {
    println!(" n  c  flagged  limit  total");
    for n in [6, 8, 10, 12] {
        for c in [1, 2] {
            let r = census(n, c, 128).unwrap();
            println!(
                "{n:>2} {c:>2} {:>8} {:>6} {:>6}",
                r.flagged,
                r.flag_limit(),
                r.total
            );
        }
    }

    for spec in ["zeros", "prng:5"] {
        let src: SequenceSource = spec.parse().unwrap();
        let profile = deficiency_profile(&src, 20, 128).unwrap();
        let shown: Vec<String> = profile
            .iter()
            .map(|d| d.map_or("?".into(), |d| d.to_string()))
            .collect();
        println!("\n{spec}: n - Ĥ for n = 1..20\n  {}", shown.join(" "));
    }
}
