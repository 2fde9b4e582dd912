//! A one-tape zig-zag palindrome recognizer with full instrumentation.
//!
//! The machine marks the leftmost unread symbol, carries it in its state to
//! the right end, compares and marks the rightmost one, then walks back. A
//! mismatch clears the `ok` flag but does not stop the sweep, so every input
//! of length `n` costs `Θ(n²)` steps. When nothing is left it returns to the
//! blank at cell `-1` and halts on cell 0.
//!
//! Crossing sequences are indexed by boundary: boundary `b` lies between
//! cells `b` and `b + 1`, and a crossing records the state entered by the
//! step that crosses it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitString;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Phase {
    Start,
    Have0,
    Have1,
    Cmp0,
    Cmp1,
    Back,
    Return,
    Halt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct State {
    pub phase: Phase,
    /// No mismatch seen so far.
    pub ok: bool,
}

impl State {
    pub const INITIAL: State = State {
        phase: Phase::Start,
        ok: true,
    };

    fn with(self, phase: Phase) -> State {
        State { phase, ok: self.ok }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = if self.ok { "" } else { "'" };
        write!(f, "{:?}{flag}", self.phase)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TapeSym {
    Zero,
    One,
    /// A consumed input cell.
    Mark,
    Blank,
}

impl TapeSym {
    pub fn as_char(self) -> char {
        match self {
            TapeSym::Zero => '0',
            TapeSym::One => '1',
            TapeSym::Mark => 'X',
            TapeSym::Blank => '_',
        }
    }

    fn from_bit(b: bool) -> Self {
        if b {
            TapeSym::One
        } else {
            TapeSym::Zero
        }
    }
}

/// `+1` or `-1`.
pub type Step = i8;

/// The recognizer's transition function. Halting states have no moves.
pub fn transition(state: State, sym: TapeSym) -> Option<(TapeSym, Step, State)> {
    use Phase::*;
    use TapeSym::*;
    let bit = matches!(sym, Zero | One);
    Some(match state.phase {
        Start => match sym {
            Zero => (Mark, 1, state.with(Have0)),
            One => (Mark, 1, state.with(Have1)),
            _ => (sym, -1, state.with(Return)),
        },
        Have0 | Have1 if bit => (sym, 1, state),
        Have0 => (sym, -1, state.with(Cmp0)),
        Have1 => (sym, -1, state.with(Cmp1)),
        // reading a mark here means the middle symbol of an odd input was the last one
        Cmp0 | Cmp1 if !bit => (sym, -1, state.with(Return)),
        Cmp0 | Cmp1 => {
            let carried = if state.phase == Cmp1 { One } else { Zero };
            let ok = state.ok && sym == carried;
            (Mark, -1, State { phase: Back, ok })
        }
        Back if bit => (sym, -1, state),
        Back => (sym, 1, state.with(Start)),
        Return if sym == Blank => (sym, 1, state.with(Halt)),
        Return => (sym, -1, state),
        Halt => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub steps: u64,
    /// `steps + 1` positions, starting at cell 0.
    pub head_path: Vec<i64>,
    /// `steps + 1` states, ending in a halting state.
    pub state_path: Vec<State>,
    pub accepted: bool,
}

struct Tape {
    cells: Vec<TapeSym>,
    origin: usize,
}

impl Tape {
    fn new(x: &BitString) -> Self {
        let mut cells = vec![TapeSym::Blank];
        cells.extend(x.iter().map(TapeSym::from_bit));
        cells.push(TapeSym::Blank);
        Tape { cells, origin: 1 }
    }

    fn slot(&mut self, pos: i64) -> &mut TapeSym {
        while pos + (self.origin as i64) < 0 {
            self.cells.insert(0, TapeSym::Blank);
            self.origin += 1;
        }
        let i = (pos + self.origin as i64) as usize;
        if i >= self.cells.len() {
            self.cells.resize(i + 1, TapeSym::Blank);
        }
        &mut self.cells[i]
    }
}

fn simulate(x: &BitString, mut record: impl FnMut(i64, State)) -> (u64, bool) {
    let mut tape = Tape::new(x);
    let mut pos = 0i64;
    let mut state = State::INITIAL;
    let mut steps = 0u64;
    record(pos, state);
    while let Some((write, mv, next)) = transition(state, *tape.slot(pos)) {
        *tape.slot(pos) = write;
        pos += i64::from(mv);
        state = next;
        steps += 1;
        record(pos, state);
    }
    debug_assert_eq!(pos, 0);
    (steps, state.ok)
}

pub fn run_palindrome_tm(x: &BitString) -> Trace {
    let mut head_path = Vec::new();
    let mut state_path = Vec::new();
    let (steps, accepted) = simulate(x, |p, s| {
        head_path.push(p);
        state_path.push(s);
    });
    Trace {
        steps,
        head_path,
        state_path,
        accepted,
    }
}

/// Step count and verdict without keeping the trace.
pub fn palindrome_steps(x: &BitString) -> (u64, bool) {
    simulate(x, |_, _| {})
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CrossingSequence {
    /// Boundary between cells `cell` and `cell + 1`.
    pub cell: i64,
    pub states: Vec<State>,
}

/// One entry per boundary the head crossed, ordered by boundary.
pub fn crossing_sequences(trace: &Trace) -> Vec<CrossingSequence> {
    let mut by_cell: BTreeMap<i64, Vec<State>> = BTreeMap::new();
    for (i, w) in trace.head_path.windows(2).enumerate() {
        let boundary = w[0].min(w[1]);
        by_cell
            .entry(boundary)
            .or_default()
            .push(trace.state_path[i + 1]);
    }
    by_cell
        .into_iter()
        .map(|(cell, states)| CrossingSequence { cell, states })
        .collect()
}

/// The crossing sequence at one boundary; empty if never crossed.
pub fn crossing_sequence_at(trace: &Trace, boundary: i64) -> Vec<State> {
    trace
        .head_path
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0].min(w[1]) == boundary)
        .map(|(i, _)| trace.state_path[i + 1])
        .collect()
}

/// Over all `x` of length `n`, checks whether the first `i` bits of `x` are
/// determined by the crossing sequence of `x x^R` at the boundary after cell
/// `i − 1`, for every `i ≤ n`. Returns the first collision found as
/// `(i, prefix_a, prefix_b)`.
pub fn injectivity_probe(n: usize) -> Option<(usize, BitString, BitString)> {
    let traces: Vec<(BitString, Trace)> = BitString::all_of_len(n)
        .map(|x| {
            let word = x.concat(&x.reversed());
            let t = run_palindrome_tm(&word);
            (x, t)
        })
        .collect();
    for i in 0..=n {
        let mut seen: HashMap<Vec<State>, BitString> = HashMap::new();
        for (x, t) in &traces {
            let prefix = x.prefix(i);
            let cs = crossing_sequence_at(t, i as i64 - 1);
            match seen.get(&cs) {
                Some(other) if *other != prefix => return Some((i, other.clone(), prefix)),
                Some(_) => {}
                None => {
                    seen.insert(cs, prefix);
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticRow {
    pub n: usize,
    pub mean_steps: f64,
    /// Mean over the previous row's mean.
    pub ratio_to_previous: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadraticReport {
    pub rows: Vec<QuadraticRow>,
    /// Least-squares slope of `ln T` against `ln n`; needs two distinct `n`.
    pub slope: Option<f64>,
    pub trials: usize,
    pub seed: u64,
}

/// Mean step counts on uniformly random inputs of each length.
pub fn quadratic_report(n_values: &[usize], trials: usize, seed: u64) -> Result<QuadraticReport> {
    if n_values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(
            "n values must be strictly ascending".into(),
        ));
    }
    if trials == 0 {
        return Err(Error::Precondition("need at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<QuadraticRow> = Vec::new();
    for &n in n_values {
        let inputs: Vec<BitString> = (0..trials)
            .map(|_| (0..n).map(|_| rng.gen::<bool>()).collect())
            .collect();
        let total: u64 = inputs.par_iter().map(|x| palindrome_steps(x).0).sum();
        let mean_steps = total as f64 / trials as f64;
        let ratio_to_previous = rows.last().map(|r| mean_steps / r.mean_steps);
        rows.push(QuadraticRow {
            n,
            mean_steps,
            ratio_to_previous,
        });
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.n > 0)
        .map(|r| ((r.n as f64).ln(), r.mean_steps.ln()))
        .collect();
    Ok(QuadraticReport {
        slope: least_squares_slope(&pts),
        rows,
        trials,
        seed,
    })
}

fn least_squares_slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;

    #[test]
    fn verdicts() {
        assert!(run_palindrome_tm(&bits("0110")).accepted);
        assert!(!run_palindrome_tm(&bits("01")).accepted);
        assert!(run_palindrome_tm(&bits("")).accepted);
        assert!(run_palindrome_tm(&bits("010")).accepted);
        assert!(!run_palindrome_tm(&bits("0111")).accepted);
    }

    #[test]
    fn exhaustive_small() {
        for x in BitString::all_up_to(10) {
            let t = run_palindrome_tm(&x);
            assert_eq!(t.accepted, x.is_palindrome(), "{x}");
            assert_eq!(t.head_path.len() as u64, t.steps + 1);
            assert_eq!(t.state_path.len() as u64, t.steps + 1);
            assert_eq!(t.head_path[0], 0);
            assert_eq!(*t.head_path.last().unwrap(), 0);
            assert!(t.head_path.windows(2).all(|w| (w[0] - w[1]).abs() == 1));
            let total: usize = crossing_sequences(&t).iter().map(|c| c.states.len()).sum();
            assert!(total as u64 <= t.steps);
        }
    }

    #[test]
    fn step_count_depends_only_on_length() {
        for n in (0..=40usize).step_by(2) {
            let expected = (n * n / 2 + 2 * n + 2) as u64;
            for x in [
                BitString::zeros(n),
                BitString::ones(n),
                BitString::from_index(0x5a5a5a5a5a, n),
            ] {
                assert_eq!(palindrome_steps(&x).0, expected, "n = {n}");
            }
        }
    }

    #[test]
    fn empty_input_crosses_only_left_of_origin() {
        let t = run_palindrome_tm(&bits(""));
        let cs = crossing_sequences(&t);
        assert!(cs.iter().all(|c| c.cell < 0));
        assert!(crossing_sequence_at(&t, 0).is_empty());
    }

    #[test]
    fn injectivity_small() {
        for n in 0..=5 {
            assert_eq!(injectivity_probe(n), None);
        }
    }

    #[test]
    fn report_shapes() {
        let r = quadratic_report(&[32], 3, 1).unwrap();
        assert_eq!(r.slope, None);
        assert_eq!(r.rows[0].ratio_to_previous, None);
        assert!(quadratic_report(&[8, 4], 3, 1).is_err());
        let r = quadratic_report(&[32, 64], 4, 1).unwrap();
        assert!(r.slope.unwrap() > 1.5);
    }
}
