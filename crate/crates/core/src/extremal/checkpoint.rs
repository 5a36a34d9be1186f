//! Resumable tree scans with plain-text progress checkpoints.

use super::{scan_tree_chunk, Acc, Direction, ExtremalResult, FreeTrees, GraphClass, Objective, Witness, TREE_CHUNK};
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

/// Scan progress: enough to resume the stream and the running optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub objective: Objective,
    pub n: usize,
    pub direction: Direction,
    pub scanned: u64,
    /// Pending generator candidate; `None` when the stream is exhausted.
    pub state: Option<Vec<u8>>,
    pub best: Option<i64>,
    pub witness_count: u64,
    pub witnesses: Vec<Witness>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

impl Checkpoint {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "objective {}", self.objective);
        let _ = writeln!(s, "n {}", self.n);
        let dir = match self.direction {
            Direction::Max => "max",
            Direction::Min => "min",
        };
        let _ = writeln!(s, "direction {dir}");
        let _ = writeln!(s, "scanned {}", self.scanned);
        match &self.state {
            Some(st) => {
                let body: Vec<String> = st.iter().map(u8::to_string).collect();
                let _ = writeln!(s, "state {}", body.join(" "));
            }
            None => s.push_str("state done\n"),
        }
        match self.best {
            Some(b) => {
                let _ = writeln!(s, "best {b}");
            }
            None => s.push_str("best none\n"),
        }
        let _ = writeln!(s, "witness_count {}", self.witness_count);
        for w in &self.witnesses {
            let body: Vec<String> = w.iter().map(|(u, v)| format!("{u}-{v}")).collect();
            let _ = writeln!(s, "witness {}", body.join(" "));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cp = Checkpoint {
            objective: Objective::Mo,
            n: 0,
            direction: Direction::Max,
            scanned: 0,
            state: None,
            best: None,
            witness_count: 0,
            witnesses: Vec::new(),
        };
        let mut seen_state = false;
        for (i, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            let num = |x: &str| x.parse::<u64>().map_err(|_| parse_err(i, format!("bad number {x:?}")));
            match key {
                "objective" => cp.objective = rest.parse()?,
                "n" => cp.n = num(rest)? as usize,
                "direction" => cp.direction = rest.parse()?,
                "scanned" => cp.scanned = num(rest)?,
                "state" => {
                    seen_state = true;
                    cp.state = if rest == "done" {
                        None
                    } else {
                        Some(
                            rest.split_whitespace()
                                .map(|x| x.parse::<u8>().map_err(|_| parse_err(i, "bad level")))
                                .collect::<Result<_>>()?,
                        )
                    };
                }
                "best" => {
                    cp.best = if rest == "none" {
                        None
                    } else {
                        Some(rest.parse().map_err(|_| parse_err(i, "bad best value"))?)
                    };
                }
                "witness_count" => cp.witness_count = num(rest)?,
                "witness" => {
                    let w = rest
                        .split_whitespace()
                        .map(|e| {
                            let (u, v) = e.split_once('-').ok_or_else(|| parse_err(i, "bad edge"))?;
                            Ok((num(u)? as usize, num(v)? as usize))
                        })
                        .collect::<Result<_>>()?;
                    cp.witnesses.push(w);
                }
                _ => return Err(parse_err(i, format!("unknown key {key:?}"))),
            }
        }
        if !seen_state || cp.n == 0 {
            return Err(parse_err(1, "incomplete checkpoint"));
        }
        Ok(cp)
    }
}

/// Tree scan that writes a checkpoint every `every` trees (rounded up to the
/// internal batch) and resumes from `path` when it holds a matching checkpoint.
pub fn scan_trees_resumable(
    objective: Objective,
    n: usize,
    direction: Direction,
    path: Option<&Path>,
    every: u64,
    mut progress: impl FnMut(&Checkpoint),
) -> Result<ExtremalResult> {
    let fresh = FreeTrees::new(n)
        .ok_or_else(|| Error::InvalidParameter(format!("tree order must be 1..={}", FreeTrees::MAX_ORDER)))?;
    let mut acc = Acc::default();
    let mut it = fresh.clone();
    if let Some(p) = path.filter(|p| p.exists()) {
        let cp = Checkpoint::parse(&std::fs::read_to_string(p)?)?;
        if cp.objective != objective || cp.n != n || cp.direction != direction {
            return Err(Error::InvalidParameter(format!(
                "checkpoint {} belongs to a different scan",
                p.display()
            )));
        }
        it = FreeTrees::resume(n, cp.state);
        acc = Acc { best: cp.best, witnesses: cp.witnesses, witness_count: cp.witness_count, scanned: cp.scanned };
    }
    let mut next_mark = (acc.scanned / every.max(1) + 1) * every.max(1);
    loop {
        let chunk: Vec<Vec<u8>> = it.by_ref().take(TREE_CHUNK).collect();
        let done = chunk.is_empty();
        scan_tree_chunk(objective, direction, &chunk, &mut acc);
        if done || acc.scanned >= next_mark {
            next_mark = (acc.scanned / every.max(1) + 1) * every.max(1);
            let cp = Checkpoint {
                objective,
                n,
                direction,
                scanned: acc.scanned,
                state: it.state().map(<[u8]>::to_vec),
                best: acc.best,
                witness_count: acc.witness_count,
                witnesses: acc.witnesses.clone(),
            };
            if let Some(p) = path {
                let tmp = p.with_extension("tmp");
                std::fs::write(&tmp, cp.to_text())?;
                std::fs::rename(&tmp, p)?;
            }
            progress(&cp);
        }
        if done {
            break;
        }
    }
    acc.finish(objective, GraphClass::Trees, n, direction)
}
