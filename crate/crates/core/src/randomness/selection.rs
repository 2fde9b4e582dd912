use std::fmt;
use std::str::FromStr;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::machine::{run, ExecBudget, RunOutcome};

use super::SequenceSource;

/// A place-selection rule: looking at `a_0 … a_k`, decide whether `a_{k+1}`
/// joins the subsequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelectionRule {
    Always,
    Never,
    /// Select when the prefix seen so far ends with the pattern.
    AfterPattern(BitString),
    /// Select `a_{k+1}` when `k + 1` is even (`true`) or odd (`false`).
    PositionParity(bool),
    /// Run machine `index` on the prefix; select when it halts with an output
    /// starting with `1`. Exceeding `step_cap` is an error, not a "no".
    Machine {
        index: u64,
        step_cap: u64,
    },
}

impl SelectionRule {
    pub fn name(&self) -> String {
        self.to_string()
    }

    pub fn select(&self, prefix: &BitString) -> Result<bool> {
        Ok(match self {
            SelectionRule::Always => true,
            SelectionRule::Never => false,
            SelectionRule::AfterPattern(w) => prefix.as_slice().ends_with(w.as_slice()),
            SelectionRule::PositionParity(even) => prefix.len().is_multiple_of(2) == *even,
            SelectionRule::Machine { index, step_cap } => {
                let budget = ExecBudget::new(*step_cap, crate::machine::DEFAULT_TAPE_CELLS)?;
                match run(*index, prefix, budget) {
                    RunOutcome::Halted { output, .. } => output.get(0) == Some(true),
                    RunOutcome::StillRunning { .. } => {
                        return Err(Error::RuleStepCap {
                            rule: self.name(),
                            prefix_len: prefix.len(),
                        })
                    }
                }
            }
        })
    }
}

impl fmt::Display for SelectionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SelectionRule::Always => f.write_str("always"),
            SelectionRule::Never => f.write_str("never"),
            SelectionRule::AfterPattern(w) => write!(f, "after:{w}"),
            SelectionRule::PositionParity(true) => f.write_str("even"),
            SelectionRule::PositionParity(false) => f.write_str("odd"),
            SelectionRule::Machine { index, step_cap } => write!(f, "machine:{index}:{step_cap}"),
        }
    }
}

impl FromStr for SelectionRule {
    type Err = Error;

    /// `always`, `never`, `after:BITS`, `even`, `odd`, `machine:INDEX:CAP`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unknown selection rule {s:?}"));
        match s {
            "always" => return Ok(SelectionRule::Always),
            "never" => return Ok(SelectionRule::Never),
            "even" => return Ok(SelectionRule::PositionParity(true)),
            "odd" => return Ok(SelectionRule::PositionParity(false)),
            _ => {}
        }
        if let Some(w) = s.strip_prefix("after:") {
            return Ok(SelectionRule::AfterPattern(w.parse()?));
        }
        if let Some(rest) = s.strip_prefix("machine:") {
            let (index, cap) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(SelectionRule::Machine {
                index: index.parse().map_err(|_| bad())?,
                step_cap: cap.parse().map_err(|_| bad())?,
            });
        }
        Err(bad())
    }
}

/// `a_{k+1}` for every `k < n − 1` with `rule(a_0 … a_k)`, in order.
pub fn select_subsequence(
    rule: &SelectionRule,
    source: &SequenceSource,
    n: usize,
) -> Result<BitString> {
    let seq = source.prefix(n)?;
    let mut out = BitString::new();
    let mut seen = BitString::with_capacity(n);
    for k in 0..n.saturating_sub(1) {
        seen.push(seq[k]);
        if rule.select(&seen)? {
            out.push(seq[k + 1]);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::bits;
    use crate::machine::{E_ID, E_LOOP};

    fn alt() -> SequenceSource {
        "alternating".parse().unwrap()
    }

    #[test]
    fn always_shifts_by_one() {
        let got = select_subsequence(&SelectionRule::Always, &alt(), 8).unwrap();
        assert_eq!(got, alt().prefix(8).unwrap().slice(1, 8));
    }

    #[test]
    fn never_selects_nothing() {
        assert!(select_subsequence(&SelectionRule::Never, &alt(), 50)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn after_zero_on_alternating_is_all_ones() {
        let rule: SelectionRule = "after:0".parse().unwrap();
        let got = select_subsequence(&rule, &alt(), 101).unwrap();
        assert_eq!(got.len(), 50);
        assert_eq!(got.count_ones(), 50);
    }

    #[test]
    fn parity_rule() {
        let got = select_subsequence(&SelectionRule::PositionParity(true), &alt(), 10).unwrap();
        // a_2, a_4, a_6, a_8 of 0101010101
        assert_eq!(got, bits("0000"));
    }

    #[test]
    fn machine_rules() {
        // identity machine selects after every 1-prefixed prefix
        let rule = SelectionRule::Machine {
            index: E_ID,
            step_cap: 4,
        };
        let src: SequenceSource = "champernowne".parse().unwrap();
        let got = select_subsequence(&rule, &src, 6).unwrap();
        assert_eq!(got, src.prefix(6).unwrap().slice(1, 6));
        let looping = SelectionRule::Machine {
            index: E_LOOP,
            step_cap: 10,
        };
        assert!(matches!(
            select_subsequence(&looping, &src, 6),
            Err(Error::RuleStepCap { prefix_len: 1, .. })
        ));
    }

    #[test]
    fn rule_names_round_trip() {
        for name in [
            "always",
            "never",
            "after:011",
            "even",
            "odd",
            "machine:3:100",
        ] {
            assert_eq!(name.parse::<SelectionRule>().unwrap().to_string(), name);
        }
        assert!("sometimes".parse::<SelectionRule>().is_err());
    }
}
