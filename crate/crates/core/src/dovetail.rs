//! Dovetailed enumeration of halting programs.
//!
//! [`sweep`] walks the triangular schedule: stage `k` admits programs of
//! length `k` and releases every program whose first halt happens at a step
//! count `≤ k`. After stage `h` it has released exactly the programs `q` with
//! `|q| ≤ h` that halt within `h` steps, each once.
//!
//! Runs are deterministic and step-monotone, so each program is simulated
//! once with the full horizon as budget; its event is then held back until
//! the stage `max(|q|, steps)` at which the schedule would have found it.

use std::collections::{BTreeMap, VecDeque};
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitString;
use crate::machine::{universal_exec, RunOutcome, DEFAULT_TAPE_CELLS};

/// A program that halted, its output, and its first-halt step count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HaltingEvent {
    pub program: BitString,
    pub output: BitString,
    pub steps: u64,
}

/// Programs are simulated in parallel in chunks of this many.
const CHUNK: u64 = 1 << 14;

/// Runs every program of length `len` under the universal machine with
/// `max_steps`, returning the halting ones in lexicographic order.
pub fn halting_of_len(len: usize, max_steps: u64) -> Vec<HaltingEvent> {
    halting_in_range(len, 0, 1u64 << len, max_steps)
}

fn halting_in_range(len: usize, start: u64, end: u64, max_steps: u64) -> Vec<HaltingEvent> {
    if max_steps == 0 {
        return Vec::new();
    }
    (start..end)
        .into_par_iter()
        .filter_map(|i| {
            let program = BitString::from_index(i, len);
            match universal_exec(&program, max_steps, DEFAULT_TAPE_CELLS) {
                RunOutcome::Halted { output, steps } => Some(HaltingEvent {
                    program,
                    output,
                    steps,
                }),
                RunOutcome::StillRunning { .. } => None,
            }
        })
        .collect()
}

/// Streaming iterator returned by [`sweep`].
pub struct Sweep {
    horizon: u64,
    stage: u64,
    // next program of the current stage's length still to simulate
    cursor: u64,
    ready: VecDeque<HaltingEvent>,
    pending: BTreeMap<u64, Vec<HaltingEvent>>,
}

impl Sweep {
    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    fn release_stage(event: &HaltingEvent) -> u64 {
        (event.program.len() as u64).max(event.steps).max(1)
    }

    fn admit(&mut self, events: Vec<HaltingEvent>) {
        for ev in events {
            let at = Self::release_stage(&ev);
            if at <= self.stage {
                self.ready.push_back(ev);
            } else {
                self.pending.entry(at).or_default().push(ev);
            }
        }
    }

    /// Advances the schedule until at least one event is ready or the sweep ends.
    fn refill(&mut self) {
        while self.ready.is_empty() && self.stage <= self.horizon {
            let len = self.stage as usize;
            let total = 1u64 << len;
            if self.cursor < total {
                let end = (self.cursor + CHUNK).min(total);
                let mut events = halting_in_range(len, self.cursor, end, self.horizon);
                if self.stage == 1 && self.cursor == 0 {
                    events.splice(0..0, halting_of_len(0, self.horizon));
                }
                self.cursor = end;
                self.admit(events);
                continue;
            }
            if let Some(held) = self.pending.remove(&self.stage) {
                self.ready.extend(held);
            }
            self.stage += 1;
            self.cursor = 0;
        }
    }
}

impl Iterator for Sweep {
    type Item = HaltingEvent;

    fn next(&mut self) -> Option<HaltingEvent> {
        if self.ready.is_empty() {
            self.refill();
        }
        self.ready.pop_front()
    }
}

/// Every program `q` with `|q| ≤ horizon` that halts within `horizon` steps,
/// in dovetail order. Consumers should not depend on the order.
pub fn sweep(horizon: u64) -> Sweep {
    Sweep {
        horizon,
        stage: 1,
        cursor: 0,
        ready: VecDeque::new(),
        pending: BTreeMap::new(),
    }
}

/// Recovers the level set `{x ∈ domain : f(x) ≤ n}` of a function
/// approximated from above, given its exact size `m`.
///
/// `staged(t, x)` must be nonincreasing in `t`, with `f(x) = min_t staged(t, x)`.
/// Stage `k` evaluates `staged(k, x)` for the first `k` domain elements;
/// elements are returned in discovery order once `m` of them qualify.
///
/// Every returned element satisfies `f(x) ≤ n`, whatever `m` is. If `m` is
/// larger than the true level set the search never ends; `max_stage` bounds
/// it, returning `None` when reached.
pub fn reconstruct_level_set<T, F>(
    n: u64,
    m: usize,
    domain: &[T],
    staged: F,
    max_stage: Option<u64>,
) -> Option<Vec<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(u64, &T) -> Option<u64>,
{
    let mut found: Vec<T> = Vec::with_capacity(m);
    let mut stage = 0u64;
    while found.len() < m {
        stage += 1;
        if max_stage.is_some_and(|cap| stage > cap) {
            return None;
        }
        let visible = domain
            .len()
            .min(usize::try_from(stage).unwrap_or(usize::MAX));
        for x in &domain[..visible] {
            if found.len() == m {
                break;
            }
            if found.contains(x) {
                continue;
            }
            if staged(stage, x).is_some_and(|v| v <= n) {
                found.push(x.clone());
            }
        }
    }
    Some(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;
    use crate::machine::{universal_run, wrap_program, ExecBudget, E_ID};
    use std::collections::HashSet;

    #[test]
    fn identity_program_is_found() {
        let q = wrap_program(E_ID, &bits("0"));
        let events: Vec<_> = sweep(4).collect();
        assert!(events
            .iter()
            .any(|e| e.program == q && e.output == bits("0")));
    }

    #[test]
    fn no_all_zero_programs() {
        assert!(sweep(8).all(|e| e.program.iter().any(|b| b)));
    }

    #[test]
    fn emitted_once_and_monotone() {
        let small: Vec<_> = sweep(6).collect();
        let set: HashSet<_> = small.iter().cloned().collect();
        assert_eq!(set.len(), small.len());
        let big: HashSet<_> = sweep(7).collect();
        assert!(set.is_subset(&big));
    }

    #[test]
    fn events_replay() {
        for ev in sweep(8) {
            let out = universal_run(&ev.program, ExecBudget::steps(ev.steps));
            assert_eq!(
                out,
                RunOutcome::Halted {
                    output: ev.output.clone(),
                    steps: ev.steps
                }
            );
        }
    }

    #[test]
    fn level_set_constant_function() {
        let domain = ["a", "b", "c"];
        let got = reconstruct_level_set(0, 3, &domain, |_, _| Some(0), None).unwrap();
        assert_eq!(got, domain);
    }

    #[test]
    fn level_set_with_wrong_count() {
        // f(x) = x, reached only from stage x on
        let domain: Vec<u64> = (0..10).collect();
        let staged = |t: u64, x: &u64| (t >= *x).then_some(*x);
        let some = reconstruct_level_set(4, 2, &domain, staged, None).unwrap();
        assert_eq!(some.len(), 2);
        assert!(some.iter().all(|&x| x <= 4));
        assert_eq!(
            reconstruct_level_set(4, 6, &domain, staged, Some(200)),
            None
        );
        assert_eq!(
            reconstruct_level_set(4, 0, &domain, staged, Some(1)),
            Some(vec![])
        );
    }
}
