//! Encodes a pair at every level and decodes it back.

use ait_core::bits;
use ait_core::codec::{decode_pair, encode_pair, encoded_len, pad, PairLevel};

fn main() {
    let (u, v) = (bits("01011"), bits("11"));
    println!("pad({u}) = {}", pad(&u));
    for level in PairLevel::ALL {
        let w = encode_pair(level, &u, &v);
        let (a, b) = decode_pair(level, &w).expect("own output decodes");
        println!(
            "level {level}: {w} ({} bits, closed form {}) -> ({a}, {b})",
            w.len(),
            encoded_len(level, u.len() as u64, v.len() as u64)
        );
    }

    // the header cost grows like 2 log |u| at level 2 and like log |u| at level 3
    println!("\n|u|   level1  level2  level3");
    for n in [1u64, 10, 100, 1000, 10_000] {
        let lens: Vec<String> = PairLevel::ALL
            .iter()
            .map(|&l| format!("{:>7}", encoded_len(l, n, 0) - n))
            .collect();
        println!("{n:<5}{}", lens.join(" "));
    }
}
