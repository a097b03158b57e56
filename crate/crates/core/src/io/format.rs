//! Line-oriented instance and solution files.
//!
//! Instance:
//!
//! ```text
//! c optional comments anywhere
//! p bnfp <nodes> <arcs>
//! n <id> <balance>                     (omitted nodes have balance 0)
//! a <tail> <head> <capacity> <weight>  (exactly <arcs> lines)
//! ```
//!
//! Solution:
//!
//! ```text
//! s <optimal|infeasible|zero_demand>
//! v <bottleneck>                       (only when optimal)
//! f <tail> <head> <flow>               (positive flows, sorted by arc)
//! ```

use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::bnfp::{SolveResult, SolveStats, Status};
use crate::graph::{Arc, Instance, InstanceError, NodeId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("missing `p bnfp <nodes> <arcs>` line")]
    MissingProblemLine,
    #[error("expected {expected} arc lines, found {found}")]
    ArcCount { expected: usize, found: usize },
    #[error("missing `s <status>` line")]
    MissingStatus,
    #[error("flow on arc ({tail}, {head}) which is not in the instance")]
    UnknownArc { tail: NodeId, head: NodeId },
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// A parse failure; `line` is 1-based, absent for whole-file problems.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: Option<usize>,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.kind),
            None => write!(f, "{}", self.kind),
        }
    }
}

impl ParseError {
    fn at(line: usize, kind: ParseErrorKind) -> Self {
        Self { line: Some(line), kind }
    }

    fn syntax(line: usize, msg: impl Into<String>) -> Self {
        Self::at(line, ParseErrorKind::Syntax(msg.into()))
    }
}

/// Non-comment, non-blank lines with their 1-based numbers, split on
/// whitespace.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.first() {
            None | Some(&"c") => None,
            Some(_) => Some((i + 1, fields)),
        }
    })
}

fn field<T: FromStr>(line: usize, fields: &[&str], i: usize, what: &str) -> Result<T, ParseError> {
    let raw = fields
        .get(i)
        .ok_or_else(|| ParseError::syntax(line, format!("missing {what}")))?;
    raw.parse()
        .map_err(|_| ParseError::syntax(line, format!("invalid {what} `{raw}`")))
}

fn arity(line: usize, fields: &[&str], expected: usize) -> Result<(), ParseError> {
    if fields.len() != expected {
        return Err(ParseError::syntax(
            line,
            format!("`{}` line takes {} fields, found {}", fields[0], expected - 1, fields.len() - 1),
        ));
    }
    Ok(())
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = records(text);
    let (p_line, header) = lines.next().ok_or(ParseError {
        line: None,
        kind: ParseErrorKind::MissingProblemLine,
    })?;
    if header[0] != "p" {
        return Err(ParseError::at(p_line, ParseErrorKind::MissingProblemLine));
    }
    arity(p_line, &header, 4)?;
    if header[1] != "bnfp" {
        return Err(ParseError::syntax(p_line, format!("unknown problem type `{}`", header[1])));
    }
    let n: usize = field(p_line, &header, 2, "node count")?;
    let m: usize = field(p_line, &header, 3, "arc count")?;

    let mut balances = vec![0i64; n];
    let mut balance_line = vec![None; n];
    let mut arcs = Vec::with_capacity(m);
    let mut arc_lines = Vec::with_capacity(m);
    for (line, fields) in lines {
        match fields[0] {
            "n" => {
                arity(line, &fields, 3)?;
                let id: usize = field(line, &fields, 1, "node id")?;
                if !(1..=n).contains(&id) {
                    return Err(ParseError::syntax(line, format!("node id {id} out of range 1..={n}")));
                }
                if let Some(first) = balance_line[id - 1] {
                    return Err(ParseError::syntax(line, format!("node {id} already given on line {first}")));
                }
                balances[id - 1] = field(line, &fields, 2, "balance")?;
                balance_line[id - 1] = Some(line);
            }
            "a" => {
                arity(line, &fields, 5)?;
                if arcs.len() == m {
                    return Err(ParseError::at(
                        line,
                        ParseErrorKind::ArcCount {
                            expected: m,
                            found: m + 1,
                        },
                    ));
                }
                arcs.push(Arc::new(
                    field(line, &fields, 1, "tail")?,
                    field(line, &fields, 2, "head")?,
                    field(line, &fields, 3, "capacity")?,
                    field(line, &fields, 4, "weight")?,
                ));
                arc_lines.push(line);
            }
            "p" => return Err(ParseError::syntax(line, "second `p` line")),
            other => return Err(ParseError::syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    if arcs.len() != m {
        return Err(ParseError {
            line: None,
            kind: ParseErrorKind::ArcCount {
                expected: m,
                found: arcs.len(),
            },
        });
    }

    Instance::new(n, arcs.clone(), &balances).map_err(|err| {
        let arc_line = |pred: &dyn Fn(&Arc) -> bool| arcs.iter().position(pred).map(|i| arc_lines[i]);
        let line = match &err {
            InstanceError::NodeOutOfRange { node, .. } => arc_line(&|a| a.tail == *node || a.head == *node),
            InstanceError::SelfLoop { node } => arc_line(&|a| a.tail == *node && a.head == *node),
            InstanceError::DuplicateArc { tail, head } => {
                let mut hits = arcs.iter().enumerate().filter(|(_, a)| a.tail == *tail && a.head == *head);
                hits.nth(1).map(|(i, _)| arc_lines[i])
            }
            InstanceError::NegativeCapacity { tail, head, .. } => {
                arc_line(&|a| a.tail == *tail && a.head == *head && a.capacity < 0)
            }
            InstanceError::NoNodes | InstanceError::UnbalancedSupply { .. } => Some(p_line),
            InstanceError::TooManyBalances { .. } => None,
        };
        ParseError { line, kind: err.into() }
    })
}

/// Canonical text: the `p` line, `n` lines for nonzero balances in id
/// order, then the arcs in index order.
pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "p bnfp {} {}", instance.node_count(), instance.arc_count()).unwrap();
    for (i, &b) in instance.balances().iter().enumerate() {
        if b != 0 {
            writeln!(out, "n {} {b}", i + 1).unwrap();
        }
    }
    for a in instance.arcs() {
        writeln!(out, "a {} {} {} {}", a.tail, a.head, a.capacity, a.weight).unwrap();
    }
    out
}

pub fn write_solution(instance: &Instance, result: &SolveResult) -> String {
    let mut out = String::new();
    writeln!(out, "s {}", result.status).unwrap();
    if let (Status::Optimal, Some(c)) = (result.status, result.bottleneck) {
        writeln!(out, "v {c}").unwrap();
    }
    let mut flows: Vec<(NodeId, NodeId, i64)> = instance
        .arcs()
        .iter()
        .zip(&result.flow)
        .filter(|&(_, &x)| x > 0)
        .map(|(a, &x)| (a.tail, a.head, x))
        .collect();
    flows.sort_unstable();
    for (tail, head, x) in flows {
        writeln!(out, "f {tail} {head} {x}").unwrap();
    }
    out
}

/// Contents of a solution file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFile {
    pub status: Status,
    pub bottleneck: Option<i64>,
    pub flows: Vec<(NodeId, NodeId, i64)>,
}

impl SolutionFile {
    /// Maps the listed flows onto `instance`'s arcs; unlisted arcs carry 0.
    /// Solution files do not record the flow value, so it is left at 0.
    pub fn into_result(self, instance: &Instance) -> Result<SolveResult, ParseError> {
        let mut flow = vec![0; instance.arc_count()];
        for (tail, head, x) in self.flows {
            let arc = instance.find_arc(tail, head).ok_or(ParseError {
                line: None,
                kind: ParseErrorKind::UnknownArc { tail, head },
            })?;
            flow[arc] = x;
        }
        Ok(SolveResult {
            status: self.status,
            bottleneck: self.bottleneck,
            flow,
            flow_value: 0,
            stats: SolveStats::default(),
        })
    }
}

pub fn parse_solution(text: &str) -> Result<SolutionFile, ParseError> {
    let mut status = None;
    let mut bottleneck = None;
    let mut flows = Vec::new();
    for (line, fields) in records(text) {
        match fields[0] {
            "s" => {
                arity(line, &fields, 2)?;
                if status.is_some() {
                    return Err(ParseError::syntax(line, "second `s` line"));
                }
                status = Some(match fields[1] {
                    "optimal" => Status::Optimal,
                    "infeasible" => Status::Infeasible,
                    "zero_demand" => Status::ZeroDemand,
                    other => return Err(ParseError::syntax(line, format!("unknown status `{other}`"))),
                });
            }
            "v" => {
                arity(line, &fields, 2)?;
                bottleneck = Some(field(line, &fields, 1, "bottleneck")?);
            }
            "f" => {
                arity(line, &fields, 4)?;
                flows.push((
                    field(line, &fields, 1, "tail")?,
                    field(line, &fields, 2, "head")?,
                    field(line, &fields, 3, "flow")?,
                ));
            }
            other => return Err(ParseError::syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let status = status.ok_or(ParseError {
        line: None,
        kind: ParseErrorKind::MissingStatus,
    })?;
    Ok(SolutionFile {
        status,
        bottleneck,
        flows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const INSTANCE_B: &str = "p bnfp 2 1\nn 1 2\nn 2 -2\na 1 2 2 4\n";

    fn instance_a() -> Instance {
        Instance::new(
            3,
            vec![Arc::new(1, 2, 1, 5), Arc::new(2, 3, 1, 3), Arc::new(1, 3, 1, 7)],
            &[1, 0, -1],
        )
        .unwrap()
    }

    #[test]
    fn instance_b_round_trip() {
        let inst = parse_instance(INSTANCE_B).unwrap();
        assert_eq!(inst, Instance::new(2, vec![Arc::new(1, 2, 2, 4)], &[2, -2]).unwrap());
        assert_eq!(write_instance(&inst), INSTANCE_B);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "c hello\n\np bnfp 2 1\nc between\nn 1 2\n   \nn 2 -2\na 1 2 2 4\n";
        assert_eq!(parse_instance(text).unwrap(), parse_instance(INSTANCE_B).unwrap());
    }

    #[test]
    fn instance_a_round_trip() {
        let a = instance_a();
        assert_eq!(parse_instance(&write_instance(&a)).unwrap(), a);
    }

    #[test]
    fn node_out_of_range() {
        let err = parse_instance("p bnfp 2 1\nn 3 1\na 1 2 1 1\n").unwrap_err();
        assert_eq!(err.line, Some(2));
        assert!(matches!(err.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn unbalanced_supply() {
        let err = parse_instance("p bnfp 2 1\nn 1 1\na 1 2 1 1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Instance(InstanceError::UnbalancedSupply { sum: 1 }));
        assert_eq!(err.line, Some(1));
    }

    #[test]
    fn arc_errors_point_at_their_line() {
        let err = parse_instance("p bnfp 2 2\na 1 2 1 1\nc x\na 1 2 1 3\n").unwrap_err();
        assert_eq!(err.line, Some(4));
        assert!(matches!(err.kind, ParseErrorKind::Instance(InstanceError::DuplicateArc { .. })));
        let err = parse_instance("p bnfp 2 1\na 2 5 1 1\n").unwrap_err();
        assert_eq!(err.line, Some(2));
    }

    #[test]
    fn malformed_lines() {
        for (text, line) in [
            ("a 1 2 1 1\n", Some(1)),
            ("p bnfp 2 x\n", Some(1)),
            ("p maxflow 2 1\n", Some(1)),
            ("p bnfp 2 1\na 1 2 1\n", Some(2)),
            ("p bnfp 2 1\nq\n", Some(2)),
            ("p bnfp 2 1\na 1 2 1 99999999999999999999\n", Some(2)),
            ("p bnfp 2 0\np bnfp 2 0\n", Some(2)),
            ("p bnfp 2 1\nn 1 0\nn 1 0\na 1 2 1 1\n", Some(3)),
            ("p bnfp 2 0\na 1 2 1 1\n", Some(2)),
            ("p bnfp 2 2\na 1 2 1 1\n", None),
            ("", None),
        ] {
            assert_eq!(parse_instance(text).unwrap_err().line, line, "{text:?}");
        }
    }

    #[test]
    fn optimal_solution_text() {
        let a = instance_a();
        let result = SolveResult {
            status: Status::Optimal,
            bottleneck: Some(5),
            flow: vec![1, 1, 0],
            flow_value: 1,
            stats: SolveStats::default(),
        };
        let text = write_solution(&a, &result);
        assert_eq!(text, "s optimal\nv 5\nf 1 2 1\nf 2 3 1\n");
        let back = parse_solution(&text).unwrap().into_result(&a).unwrap();
        assert_eq!((back.bottleneck, back.flow), (Some(5), vec![1, 1, 0]));
    }

    #[test]
    fn flows_are_sorted_by_arc() {
        let inst = Instance::new(3, vec![Arc::new(2, 3, 1, 1), Arc::new(1, 2, 1, 1)], &[1, 0, -1]).unwrap();
        let result = SolveResult {
            status: Status::Optimal,
            bottleneck: Some(1),
            flow: vec![1, 1],
            flow_value: 1,
            stats: SolveStats::default(),
        };
        assert_eq!(write_solution(&inst, &result), "s optimal\nv 1\nf 1 2 1\nf 2 3 1\n");
    }

    #[test]
    fn zero_demand_is_a_single_line() {
        let a = instance_a();
        assert_eq!(write_solution(&a, &SolveResult::zero_demand(3)), "s zero_demand\n");
        let file = parse_solution("s zero_demand\n").unwrap();
        assert_eq!(file.status, Status::ZeroDemand);
        assert!(file.flows.is_empty());
    }

    #[test]
    fn bad_solutions() {
        assert_eq!(parse_solution("v 3\n").unwrap_err().kind, ParseErrorKind::MissingStatus);
        assert_eq!(parse_solution("s maybe\n").unwrap_err().line, Some(1));
        let file = parse_solution("s optimal\nv 1\nf 3 1 1\n").unwrap();
        assert_eq!(
            file.into_result(&instance_a()).unwrap_err().kind,
            ParseErrorKind::UnknownArc { tail: 3, head: 1 }
        );
    }
}
