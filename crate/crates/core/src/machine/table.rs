//! One-tape machine tables, their canonical index encoding, and the simulator.
//!
//! # Index layout
//!
//! A table index `t` is read as a little-endian bit stream (bit 0 first):
//!
//! 1. a run of `k` one-bits terminated by a zero gives `state_count = k + 1`;
//! 2. then, for each `(state, symbol)` in order `(0,'0'), (0,'1'), (0,_), (1,'0'), …`:
//!    * 1 bit  move: `0 = L`, `1 = R`
//!    * 2 bits write: value mod 3, `0 = '0'`, `1 = '1'`, `2 = blank`
//!    * `w` bits next, `w = ⌈log₂(state_count + 1)⌉`: value mod `(state_count + 1)`,
//!      where `state_count` itself means HALT.
//!
//! Bits past the end of the index read as zero, so every index decodes to a
//! total table, and [`MachineTable::canonical_index`] is a right inverse.
//! Table index 0 is the one-state machine that writes `'0'`, moves left and
//! never halts.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::bits::BitString;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Blank,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::One, Symbol::Blank];

    pub fn index(self) -> usize {
        match self {
            Symbol::Zero => 0,
            Symbol::One => 1,
            Symbol::Blank => 2,
        }
    }

    pub fn from_index(i: usize) -> Symbol {
        Symbol::ALL[i % 3]
    }

    pub fn from_bit(b: bool) -> Symbol {
        if b {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Blank => '_',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Next {
    State(usize),
    Halt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transition {
    pub next: Next,
    pub write: Symbol,
    pub mv: Move,
}

impl Transition {
    pub const fn new(next: Next, write: Symbol, mv: Move) -> Self {
        Self { next, write, mv }
    }
}

/// A deterministic one-tape machine over `{0, 1, blank}`. State 0 is initial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MachineTable {
    state_count: usize,
    transitions: Vec<Transition>,
}

fn next_width(state_count: usize) -> u64 {
    // ⌈log₂(state_count + 1)⌉
    let n = state_count as u64 + 1;
    64 - (n - 1).leading_zeros() as u64
}

impl MachineTable {
    /// Builds a table from `3 · state_count` transitions ordered by
    /// `(state, symbol)`. Returns `None` if the table is not total or refers
    /// to a state out of range.
    pub fn new(state_count: usize, transitions: Vec<Transition>) -> Option<Self> {
        if state_count == 0 || transitions.len() != 3 * state_count {
            return None;
        }
        let in_range = transitions.iter().all(|t| match t.next {
            Next::State(s) => s < state_count,
            Next::Halt => true,
        });
        in_range.then_some(Self {
            state_count,
            transitions,
        })
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn transition(&self, state: usize, sym: Symbol) -> Transition {
        self.transitions[3 * state + sym.index()]
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    /// Decodes a table from an index given as a bit oracle (bit `i` of the index).
    pub fn decode_with(bit: impl Fn(u64) -> bool) -> Self {
        let mut pos = 0u64;
        let mut state_count = 1usize;
        while bit(pos) {
            state_count += 1;
            pos += 1;
        }
        pos += 1;
        let mut field = |width: u64| {
            let mut v = 0u64;
            for i in 0..width {
                if bit(pos + i) {
                    v |= 1 << i;
                }
            }
            pos += width;
            v
        };
        let width = next_width(state_count);
        let transitions = (0..3 * state_count)
            .map(|_| {
                let mv = if field(1) == 1 {
                    Move::Right
                } else {
                    Move::Left
                };
                let write = Symbol::from_index(field(2) as usize);
                let next = field(width) as usize % (state_count + 1);
                let next = if next == state_count {
                    Next::Halt
                } else {
                    Next::State(next)
                };
                Transition { next, write, mv }
            })
            .collect();
        Self {
            state_count,
            transitions,
        }
    }

    pub fn decode(index: u64) -> Self {
        Self::decode_with(|i| i < 64 && (index >> i) & 1 == 1)
    }

    pub fn decode_big(index: &BigUint) -> Self {
        Self::decode_with(|i| index.bit(i))
    }

    /// The least index whose fields hold exactly this table's values.
    pub fn canonical_index(&self) -> BigUint {
        let mut out = BigUint::zero();
        let mut pos = 0u64;
        for _ in 1..self.state_count {
            out.set_bit(pos, true);
            pos += 1;
        }
        pos += 1;
        let mut put = |value: u64, width: u64| {
            for i in 0..width {
                if (value >> i) & 1 == 1 {
                    out.set_bit(pos + i, true);
                }
            }
            pos += width;
        };
        let width = next_width(self.state_count);
        for t in &self.transitions {
            put(matches!(t.mv, Move::Right) as u64, 1);
            put(t.write.index() as u64, 2);
            let next = match t.next {
                Next::State(s) => s as u64,
                Next::Halt => self.state_count as u64,
            };
            put(next, width);
        }
        out
    }

    /// Halts immediately, leaving the input as output.
    pub fn identity() -> Self {
        let halt_keep = |s| Transition::new(Next::Halt, s, Move::Left);
        Self::new(
            1,
            vec![
                halt_keep(Symbol::Zero),
                halt_keep(Symbol::One),
                halt_keep(Symbol::Blank),
            ],
        )
        .expect("identity table is total")
    }

    /// Complements every input bit in one left-to-right pass.
    pub fn flip() -> Self {
        Self::new(
            1,
            vec![
                Transition::new(Next::State(0), Symbol::One, Move::Right),
                Transition::new(Next::State(0), Symbol::Zero, Move::Right),
                Transition::new(Next::Halt, Symbol::Blank, Move::Left),
            ],
        )
        .expect("flip table is total")
    }
}

impl fmt::Debug for MachineTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MachineTable({} states)", self.state_count)?;
        for s in 0..self.state_count {
            for sym in Symbol::ALL {
                let t = self.transition(s, sym);
                let next = match t.next {
                    Next::State(n) => n.to_string(),
                    Next::Halt => "H".to_string(),
                };
                let mv = if t.mv == Move::Left { 'L' } else { 'R' };
                writeln!(
                    f,
                    "  {s} {} -> {next} {} {mv}",
                    sym.as_char(),
                    t.write.as_char()
                )?;
            }
        }
        Ok(())
    }
}

/// One executed transition, reported before it is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct TraceStep {
    pub step: u64,
    pub state: usize,
    pub head: usize,
    pub sym: char,
}

pub(crate) enum TableRun {
    Halted { output: BitString, steps: u64 },
    OutOfSteps { steps: u64 },
    OutOfTape { steps: u64 },
}

/// Runs `table` on a semi-infinite tape holding `input` from cell 0.
/// A left move on cell 0 leaves the head in place.
pub(crate) fn simulate(
    table: &MachineTable,
    input: &BitString,
    max_steps: u64,
    max_tape_cells: usize,
    mut trace: Option<&mut dyn FnMut(TraceStep)>,
) -> TableRun {
    if input.len() > max_tape_cells {
        return TableRun::OutOfTape { steps: 0 };
    }
    let mut tape: Vec<Symbol> = input.iter().map(Symbol::from_bit).collect();
    let mut head = 0usize;
    let mut state = 0usize;
    let mut steps = 0u64;
    while steps < max_steps {
        let sym = tape.get(head).copied().unwrap_or(Symbol::Blank);
        if let Some(f) = trace.as_mut() {
            f(TraceStep {
                step: steps + 1,
                state,
                head,
                sym: sym.as_char(),
            });
        }
        let t = table.transition(state, sym);
        if head >= tape.len() {
            tape.resize(head + 1, Symbol::Blank);
        }
        tape[head] = t.write;
        steps += 1;
        match t.mv {
            Move::Left => head = head.saturating_sub(1),
            Move::Right => {
                head += 1;
                if head >= max_tape_cells {
                    return TableRun::OutOfTape { steps };
                }
            }
        }
        match t.next {
            Next::Halt => {
                let output = tape
                    .iter()
                    .take_while(|&&s| s != Symbol::Blank)
                    .map(|&s| s == Symbol::One)
                    .collect();
                return TableRun::Halted { output, steps };
            }
            Next::State(s) => state = s,
        }
    }
    TableRun::OutOfSteps { steps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;

    #[test]
    fn index_zero_is_left_looper() {
        let t = MachineTable::decode(0);
        assert_eq!(t.state_count(), 1);
        for sym in Symbol::ALL {
            assert_eq!(
                t.transition(0, sym),
                Transition::new(Next::State(0), Symbol::Zero, Move::Left)
            );
        }
    }

    #[test]
    fn golden_small_indices() {
        // bit0 = 0 → one state; bit1 = move of (0,'0'); bits2-3 write; bit4 next
        let t = MachineTable::decode(0b11010);
        assert_eq!(
            t.transition(0, Symbol::Zero),
            Transition::new(Next::Halt, Symbol::Blank, Move::Right)
        );
        // write field 3 reduces to 0
        let t = MachineTable::decode(0b01100);
        assert_eq!(t.transition(0, Symbol::Zero).write, Symbol::Zero);
        // leading one → two states, next width 2
        let t = MachineTable::decode(0b1);
        assert_eq!(t.state_count(), 2);
    }

    #[test]
    fn canonical_index_round_trips_library_tables() {
        for table in [
            MachineTable::identity(),
            MachineTable::flip(),
            MachineTable::decode(12345),
        ] {
            assert_eq!(MachineTable::decode_big(&table.canonical_index()), table);
        }
    }

    #[test]
    fn next_width_values() {
        assert_eq!(next_width(1), 1);
        assert_eq!(next_width(2), 2);
        assert_eq!(next_width(3), 2);
        assert_eq!(next_width(4), 3);
        assert_eq!(next_width(7), 3);
        assert_eq!(next_width(8), 4);
    }

    #[test]
    fn simulate_flip() {
        match simulate(&MachineTable::flip(), &bits("0110"), 100, 100, None) {
            TableRun::Halted { output, steps } => {
                assert_eq!(output, bits("1001"));
                assert_eq!(steps, 5);
            }
            _ => panic!("flip must halt"),
        }
    }

    #[test]
    fn tape_cap_stops_runaway() {
        // moves right forever: all transitions (0, '1', R)
        let runaway = MachineTable::new(
            1,
            vec![Transition::new(Next::State(0), Symbol::One, Move::Right); 3],
        )
        .unwrap();
        assert!(matches!(
            simulate(&runaway, &bits(""), 1000, 10, None),
            TableRun::OutOfTape { steps: 10 }
        ));
    }
}
