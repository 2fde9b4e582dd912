//! Any machine of the enumeration runs inside the universal machine at an
//! additive cost of `e + 1` program bits.

use ait_core::machine::{run, universal_run, wrap_program, ExecBudget, E_FLIP, E_ZEROS};
use ait_core::{bits, BitString};

fn main() {
    let budget = ExecBudget::steps(200);
    let cases = [
        (E_FLIP, bits("110100")),
        (E_ZEROS, bits("1100")),
        (9, bits("0101")),
        (40, bits("")),
    ];
    for (e, p) in cases {
        let direct = run(e, &p, budget);
        let q = wrap_program(e, &p);
        let wrapped = universal_run(&q, budget);
        assert_eq!(direct, wrapped);
        println!("E({e}, {p}) = {direct:?}");
        println!(
            "  U({q}) agrees; program grew from {} to {} bits",
            p.len(),
            q.len()
        );
    }

    // a long run of zeros costs the zeros machine only its numeral
    let x = BitString::zeros(200);
    let q = wrap_program(E_ZEROS, &ait_core::codec::bin(200));
    assert!(universal_run(&q, ExecBudget::steps(1000)).halted_with(&x));
    println!("\n0^200 from a {}-bit program: {q}", q.len());
}
