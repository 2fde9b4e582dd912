//! Builds programs for f(x) and for x-from-(y, x|y) out of existing programs.

use ait_core::bits;
use ait_core::complexity::{compose_program, mix_length, mix_programs};
use ait_core::machine::{
    conditional_run, universal_run, wrap_program, ExecBudget, E_FLIP, E_ID, E_SND, E_ZEROS,
};

fn main() {
    let budget = ExecBudget::steps(10_000);

    let p = wrap_program(E_ZEROS, &bits("101"));
    let x = universal_run(&p, budget).into_output().unwrap();
    let q = compose_program(E_FLIP, &p);
    let fx = universal_run(&q, budget).into_output().unwrap();
    println!("U({p}) = {x}");
    println!("flip via {q}: {fx} ({} extra bits)", q.len() - p.len());

    // p prints y, q turns y into x; the mix prints x
    let p = wrap_program(E_ID, &bits("1001101"));
    let y = universal_run(&p, budget).into_output().unwrap();
    let q = wrap_program(E_SND, &bits(""));
    let x = conditional_run(&q, &y, budget).into_output().unwrap();
    let m = mix_programs(&p, &q);
    assert!(universal_run(&m, budget).halted_with(&x));
    println!("\nmix({p}, {q}) = {m}");
    println!(
        "  {} bits, formula {}",
        m.len(),
        mix_length(p.len() as u64, q.len() as u64)
    );
    for (a, b) in [(3, 200), (200, 3), (50, 50)] {
        println!(
            "  |p| = {a:>3}, |q| = {b:>3}: mixed length {}",
            mix_length(a, b)
        );
    }
}
