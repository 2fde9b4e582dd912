//! The fixed library occupying the low indices of the family.
//!
//! | index | name       | behaviour on input `p`                                          |
//! |-------|------------|-----------------------------------------------------------------|
//! | 0     | identity   | table; halts at once, output `p` (1 step)                       |
//! | 1     | second     | `p = ⟨a, b⟩₂` → `b`                                              |
//! | 2     | first      | `p = ⟨a, b⟩₂` → `a`                                              |
//! | 3     | zeros      | `p` read as a binary numeral `n` → `0^n`                        |
//! | 4     | flip       | table; complements every bit                                    |
//! | 5     | compose    | `p = 0^e 1 z` → `E(e, U(z))`                                    |
//! | 6     | mix        | `p = pad(bin|z|) 1 z w` → `V(w, U(z))`                          |
//! | 7     | mix-tail   | `p = pad(bin|w|) 1 z w` → `V(w, U(z))`                          |
//!
//! Index 8 is table index 0, a one-state machine that never halts.
//!
//! Non-table entries charge `1 + |p|` steps for reading their input, plus
//! `|output|` for the projections and `zeros`, plus the steps of every inner
//! run for the combinators. Malformed input diverges, i.e. consumes the whole
//! budget without halting; so does any request exceeding the tape cap.

use crate::bits::BitString;
use crate::codec::{decode_pair, decode_pair_tail_counted, PairLevel};

use super::table::MachineTable;
use super::{conditional_exec, exec_index, universal_exec, Machine, RunOutcome};

pub const E_ID: u64 = 0;
pub const E_SND: u64 = 1;
pub const E_FST: u64 = 2;
pub const E_ZEROS: u64 = 3;
pub const E_FLIP: u64 = 4;
pub const E_COMP: u64 = 5;
pub const E_MIX: u64 = 6;
pub const E_MIX_TAIL: u64 = 7;
pub const LIBRARY_SIZE: u64 = 8;
pub const E_LOOP: u64 = LIBRARY_SIZE;

/// Library machines that are not one-tape tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Native {
    Second,
    First,
    Zeros,
    Compose,
    Mix,
    MixTail,
}

pub(crate) fn library_machine(e: u64) -> Machine {
    match e {
        E_ID => Machine::Table(MachineTable::identity()),
        E_SND => Machine::Native(Native::Second),
        E_FST => Machine::Native(Native::First),
        E_ZEROS => Machine::Native(Native::Zeros),
        E_FLIP => Machine::Table(MachineTable::flip()),
        E_COMP => Machine::Native(Native::Compose),
        E_MIX => Machine::Native(Native::Mix),
        E_MIX_TAIL => Machine::Native(Native::MixTail),
        _ => unreachable!("index {e} is outside the library"),
    }
}

impl Native {
    pub fn name(self) -> &'static str {
        match self {
            Native::Second => "second",
            Native::First => "first",
            Native::Zeros => "zeros",
            Native::Compose => "compose",
            Native::Mix => "mix",
            Native::MixTail => "mix-tail",
        }
    }

    pub(crate) fn exec(
        self,
        input: &BitString,
        max_steps: u64,
        max_tape_cells: usize,
    ) -> RunOutcome {
        let diverge = RunOutcome::StillRunning { steps: max_steps };
        let read = 1 + input.len() as u64;
        let Some(left) = max_steps.checked_sub(read) else {
            return diverge;
        };
        let emit = |output: BitString, inner: u64| {
            let cost = read + inner;
            if output.len() > max_tape_cells || cost > max_steps {
                RunOutcome::StillRunning { steps: max_steps }
            } else {
                RunOutcome::Halted {
                    output,
                    steps: cost,
                }
            }
        };
        match self {
            Native::Second | Native::First => {
                let Ok((a, b)) = decode_pair(PairLevel::Two, input) else {
                    return diverge;
                };
                let out = if self == Native::Second { b } else { a };
                let cost = out.len() as u64;
                emit(out, cost)
            }
            Native::Zeros => match input.to_u64() {
                Some(n) if n <= left && n <= max_tape_cells as u64 => {
                    emit(BitString::zeros(n as usize), n)
                }
                _ => diverge,
            },
            Native::Compose => {
                let Some((e, z)) = super::parse_program(input) else {
                    return diverge;
                };
                let RunOutcome::Halted {
                    output: y,
                    steps: s1,
                } = universal_exec(&z, left, max_tape_cells)
                else {
                    return diverge;
                };
                match exec_index(e, &y, left - s1, max_tape_cells) {
                    RunOutcome::Halted { output, steps: s2 } => emit(output, s1 + s2),
                    RunOutcome::StillRunning { .. } => diverge,
                }
            }
            Native::Mix | Native::MixTail => {
                let parts = if self == Native::Mix {
                    decode_pair(PairLevel::Two, input)
                } else {
                    decode_pair_tail_counted(input)
                };
                let Ok((z, w)) = parts else {
                    return diverge;
                };
                let RunOutcome::Halted {
                    output: y,
                    steps: s1,
                } = universal_exec(&z, left, max_tape_cells)
                else {
                    return diverge;
                };
                match conditional_exec(&w, &y, left - s1, max_tape_cells) {
                    RunOutcome::Halted { output, steps: s2 } => emit(output, s1 + s2),
                    RunOutcome::StillRunning { .. } => diverge,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;
    use crate::codec::{encode_pair, encode_pair_tail_counted};
    use crate::machine::{run, wrap_program, ExecBudget};

    fn halts(e: u64, input: &str) -> Option<(BitString, u64)> {
        match run(e, &bits(input), ExecBudget::steps(1000)) {
            RunOutcome::Halted { output, steps } => Some((output, steps)),
            RunOutcome::StillRunning { .. } => None,
        }
    }

    #[test]
    fn projections() {
        let w = encode_pair(PairLevel::Two, &bits("101"), &bits("0011"));
        assert_eq!(
            halts(E_SND, &w.to_string()),
            Some((bits("0011"), 1 + 12 + 4))
        );
        assert_eq!(
            halts(E_FST, &w.to_string()),
            Some((bits("101"), 1 + 12 + 3))
        );
        assert_eq!(halts(E_SND, "0000"), None);
    }

    #[test]
    fn zeros_golden() {
        assert_eq!(halts(E_ZEROS, "101"), Some((bits("00000"), 1 + 3 + 5)));
        assert_eq!(halts(E_ZEROS, ""), Some((bits(""), 1)));
        // 2^40 zeros is over the tape cap
        assert_eq!(halts(E_ZEROS, &format!("1{}", "0".repeat(40))), None);
    }

    #[test]
    fn compose_applies_outer_machine() {
        // compose(flip, identity program "1011") → flip(1011)
        let z = wrap_program(E_ID, &bits("1011"));
        let input = wrap_program(E_FLIP, &z);
        let (out, steps) = halts(E_COMP, &input.to_string()).unwrap();
        assert_eq!(out, bits("0100"));
        // read 1+|input|, identity 1 step, flip 5 steps
        assert_eq!(steps, 1 + input.len() as u64 + 1 + 5);
    }

    #[test]
    fn mix_variants_agree() {
        let p = wrap_program(E_ID, &bits("110"));
        let q = wrap_program(E_FLIP, &bits(""));
        // V(q, y) = flip(⟨"", y⟩₂) = flip("001110")
        let head = halts(E_MIX, &encode_pair(PairLevel::Two, &p, &q).to_string()).unwrap();
        let tail = halts(E_MIX_TAIL, &encode_pair_tail_counted(&p, &q).to_string()).unwrap();
        assert_eq!(head.0, bits("110001"));
        assert_eq!(tail.0, head.0);
    }

    #[test]
    fn insufficient_budget_is_still_running() {
        let out = run(E_ZEROS, &bits("111"), ExecBudget::steps(10));
        assert_eq!(out, RunOutcome::StillRunning { steps: 10 });
        let out = run(E_ZEROS, &bits("111"), ExecBudget::steps(11));
        assert!(out.is_halted());
    }
}
