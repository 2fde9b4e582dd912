//! Frequency, selection, LIL and finite Martin-Löf tests on a few sources.

use ait_core::bits::BitString;
use ait_core::randomness::{
    frequency_stats, lil_statistic, ml_test_eval, select_subsequence, FiniteMLTest, SelectionRule,
    SequenceSource,
};

fn main() {
    let n = 100_000;
    for spec in ["prng:1", "alternating", "champernowne", "zeros"] {
        let src: SequenceSource = spec.parse().unwrap();
        let (s, ratio) = frequency_stats(&src, n).unwrap();
        let lil = lil_statistic(&src, n).unwrap();
        println!(
            "{spec:<13} S_n {s:>6}  S_n/n {:.4}  s* {:>9.3}  s*/sqrt(2 ln ln n) {:>8.3}",
            *ratio.numer() as f64 / *ratio.denom() as f64,
            lil.s_star,
            lil.ratio
        );
    }

    let alt: SequenceSource = "alternating".parse().unwrap();
    for rule in ["always", "after:0", "even"] {
        let rule: SelectionRule = rule.parse().unwrap();
        let sub = select_subsequence(&rule, &alt, 1000).unwrap();
        println!(
            "\n{rule} on alternating: {} selected, {} ones",
            sub.len(),
            sub.count_ones()
        );
    }

    let test =
        FiniteMLTest::from_generator(10, 0, |n, _| Some(BitString::zeros(n as usize))).unwrap();
    for spec in ["zeros", "prng:1"] {
        let src: SequenceSource = spec.parse().unwrap();
        let verdicts: Vec<String> = ml_test_eval(&test, &src, 8)
            .unwrap()
            .iter()
            .map(|v| {
                format!("{:?}", v.verdict)
                    .split_whitespace()
                    .next()
                    .unwrap()
                    .to_string()
            })
            .collect();
        println!("\n0^n test on {spec}: {}", verdicts.join(" "));
    }
    let bad = FiniteMLTest::from_json(r#"{"2": ["00", "01", "10"]}"#);
    println!("oversized level rejected: {}", bad.unwrap_err());
}
