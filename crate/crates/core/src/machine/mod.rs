//! The enumerated machine family `E(e, p)`, the universal wrapper
//! `U(0^e 1 p) = E(e, p)` and the conditional universal
//! `V(0^e 1 p, y) = E(e, ⟨p, y⟩₂)`.
//!
//! Indices `0..LIBRARY_SIZE` are a fixed library of small machines (see
//! [`library`]); every index `e ≥ LIBRARY_SIZE` is the one-tape table decoded
//! from `e - LIBRARY_SIZE` (see [`table`]). The map is total, and onto all
//! tables because [`MachineTable::canonical_index`] inverts the decoding.
//!
//! Runs are deterministic. A run that halts within `t` steps halts with the
//! same output and step count under any larger budget.

pub mod library;
pub mod table;

use num_bigint::BigUint;

use crate::bits::BitString;
use crate::codec::{encode_pair, PairLevel};
use crate::error::{Error, Result};

pub use library::{
    Native, E_COMP, E_FLIP, E_FST, E_ID, E_LOOP, E_MIX, E_MIX_TAIL, E_SND, E_ZEROS, LIBRARY_SIZE,
};
pub use table::{MachineTable, Move, Next, Symbol, TraceStep, Transition};

/// Default tape cap used by [`ExecBudget::steps`].
pub const DEFAULT_TAPE_CELLS: usize = 1 << 16;

/// Resource bounds for a single run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExecBudget {
    max_steps: u64,
    max_tape_cells: usize,
}

impl ExecBudget {
    pub fn new(max_steps: u64, max_tape_cells: usize) -> Result<Self> {
        if max_steps == 0 || max_tape_cells == 0 {
            return Err(Error::EmptyBudget);
        }
        Ok(Self {
            max_steps,
            max_tape_cells,
        })
    }

    /// `max_steps` steps with the default tape cap. Panics on zero.
    pub fn steps(max_steps: u64) -> Self {
        Self::new(max_steps, DEFAULT_TAPE_CELLS).expect("step budget must be positive")
    }

    pub fn max_steps(&self) -> u64 {
        self.max_steps
    }

    pub fn max_tape_cells(&self) -> usize {
        self.max_tape_cells
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RunOutcome {
    Halted { output: BitString, steps: u64 },
    StillRunning { steps: u64 },
}

impl RunOutcome {
    pub fn is_halted(&self) -> bool {
        matches!(self, RunOutcome::Halted { .. })
    }

    pub fn output(&self) -> Option<&BitString> {
        match self {
            RunOutcome::Halted { output, .. } => Some(output),
            RunOutcome::StillRunning { .. } => None,
        }
    }

    pub fn into_output(self) -> Option<BitString> {
        match self {
            RunOutcome::Halted { output, .. } => Some(output),
            RunOutcome::StillRunning { .. } => None,
        }
    }

    pub fn steps(&self) -> u64 {
        match self {
            RunOutcome::Halted { steps, .. } | RunOutcome::StillRunning { steps } => *steps,
        }
    }

    /// True when this run halted with exactly `x`.
    pub fn halted_with(&self, x: &BitString) -> bool {
        self.output() == Some(x)
    }
}

/// A decoded member of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Machine {
    Table(MachineTable),
    Native(Native),
}

pub fn enumerate_machine(e: u64) -> Machine {
    if e < LIBRARY_SIZE {
        library::library_machine(e)
    } else {
        Machine::Table(MachineTable::decode(e - LIBRARY_SIZE))
    }
}

/// [`enumerate_machine`] for indices beyond `u64`.
pub fn enumerate_machine_big(e: &BigUint) -> Machine {
    match u64::try_from(e) {
        Ok(small) => enumerate_machine(small),
        Err(_) => Machine::Table(MachineTable::decode_big(&(e - BigUint::from(LIBRARY_SIZE)))),
    }
}

/// The least index `e` with `enumerate_machine_big(e) == Machine::Table(table)`
/// among table indices (library entries that happen to be tables are not
/// considered).
pub fn index_of_table(table: &MachineTable) -> BigUint {
    table.canonical_index() + BigUint::from(LIBRARY_SIZE)
}

pub(crate) fn exec(
    machine: &Machine,
    input: &BitString,
    max_steps: u64,
    max_tape_cells: usize,
    trace: Option<&mut dyn FnMut(TraceStep)>,
) -> RunOutcome {
    match machine {
        Machine::Table(t) => match table::simulate(t, input, max_steps, max_tape_cells, trace) {
            table::TableRun::Halted { output, steps } => RunOutcome::Halted { output, steps },
            table::TableRun::OutOfSteps { steps } | table::TableRun::OutOfTape { steps } => {
                RunOutcome::StillRunning { steps }
            }
        },
        Machine::Native(n) => n.exec(input, max_steps, max_tape_cells),
    }
}

pub(crate) fn exec_index(
    e: u64,
    input: &BitString,
    max_steps: u64,
    max_tape_cells: usize,
) -> RunOutcome {
    exec(
        &enumerate_machine(e),
        input,
        max_steps,
        max_tape_cells,
        None,
    )
}

/// Runs machine `e` on `input`.
pub fn run(e: u64, input: &BitString, budget: ExecBudget) -> RunOutcome {
    exec_index(e, input, budget.max_steps, budget.max_tape_cells)
}

/// Like [`run`], reporting every executed transition of a table machine.
/// Library machines that are not tables report nothing.
pub fn run_traced(
    e: u64,
    input: &BitString,
    budget: ExecBudget,
    mut on_step: impl FnMut(TraceStep),
) -> RunOutcome {
    exec(
        &enumerate_machine(e),
        input,
        budget.max_steps,
        budget.max_tape_cells,
        Some(&mut on_step),
    )
}

/// `0^e · 1 · p`.
pub fn wrap_program(e: u64, p: &BitString) -> BitString {
    let mut q = BitString::zeros(e as usize);
    q.push(true);
    q.extend_from(p);
    q
}

/// Splits `q = 0^e 1 p`; `None` when `q` holds no `1`.
pub fn parse_program(q: &BitString) -> Option<(u64, BitString)> {
    let e = q.iter().position(|b| b)?;
    Some((e as u64, q.slice(e + 1, q.len())))
}

pub(crate) fn universal_exec(q: &BitString, max_steps: u64, max_tape_cells: usize) -> RunOutcome {
    match parse_program(q) {
        Some((e, p)) => exec_index(e, &p, max_steps, max_tape_cells),
        None => RunOutcome::StillRunning { steps: max_steps },
    }
}

pub(crate) fn conditional_exec(
    q: &BitString,
    y: &BitString,
    max_steps: u64,
    max_tape_cells: usize,
) -> RunOutcome {
    match parse_program(q) {
        Some((e, p)) => exec_index(
            e,
            &encode_pair(PairLevel::Two, &p, y),
            max_steps,
            max_tape_cells,
        ),
        None => RunOutcome::StillRunning { steps: max_steps },
    }
}

/// `U(0^e 1 p) = E(e, p)`; programs without a `1` never halt.
/// Parsing is free: the step count is exactly that of `run(e, p)`.
pub fn universal_run(q: &BitString, budget: ExecBudget) -> RunOutcome {
    universal_exec(q, budget.max_steps, budget.max_tape_cells)
}

/// `V(0^e 1 p, y) = E(e, ⟨p, y⟩₂)` with the level-2 pair code.
pub fn conditional_run(q: &BitString, y: &BitString, budget: ExecBudget) -> RunOutcome {
    conditional_exec(q, y, budget.max_steps, budget.max_tape_cells)
}
