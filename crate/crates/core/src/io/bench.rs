//! Benchmark harness: generate instances, run every requested solver a few
//! times, and emit one CSV row per run.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::generate::{generate_instance, GeneratorSpec};
use crate::bnfp::{solve, Algorithm, SolverConfig};

pub const CSV_HEADER: &str = "family,n,m,B,seed,algo,rep,time_ns,augmentations,maxflow_calls,probes,bottleneck,status";

/// One `(instance, algorithm, repetition)` run. `status` is the solver's
/// status, or `error: ...` when generation or solving failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub m: usize,
    #[serde(rename = "B")]
    pub balance: i64,
    pub seed: u64,
    pub algo: String,
    pub rep: usize,
    pub time_ns: u64,
    pub augmentations: usize,
    pub maxflow_calls: usize,
    pub probes: usize,
    pub bottleneck: Option<i64>,
    pub status: String,
}

impl BenchRecord {
    pub fn is_failure(&self) -> bool {
        self.status.starts_with("error")
    }
}

/// The `[[instance]]` tables of a bench spec file.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchFile {
    pub instance: Vec<GeneratorSpec>,
}

impl BenchFile {
    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}

pub fn run_bench(specs: &[GeneratorSpec], algorithms: &[Algorithm], repetitions: usize) -> Vec<BenchRecord> {
    let mut records = Vec::new();
    for spec in specs {
        let blank = |algo: Algorithm, rep: usize, status: String| BenchRecord {
            family: spec.family.to_string(),
            n: spec.nodes,
            m: spec.arcs,
            balance: spec.balance,
            seed: spec.seed,
            algo: algo.to_string(),
            rep,
            time_ns: 0,
            augmentations: 0,
            maxflow_calls: 0,
            probes: 0,
            bottleneck: None,
            status,
        };
        let instance = match generate_instance(spec) {
            Ok(instance) => instance,
            Err(err) => {
                for &algo in algorithms {
                    for rep in 0..repetitions {
                        records.push(blank(algo, rep, format!("error: {err}")));
                    }
                }
                continue;
            }
        };
        for &algo in algorithms {
            let config = SolverConfig::new(algo);
            for rep in 0..repetitions {
                let start = Instant::now();
                let outcome = solve(&instance, &config);
                let time_ns = u64::try_from(start.elapsed().as_nanos()).unwrap_or(u64::MAX);
                records.push(match outcome {
                    Ok(result) => BenchRecord {
                        time_ns,
                        augmentations: result.stats.augmentations,
                        maxflow_calls: result.stats.maxflow_calls,
                        probes: result.stats.thresholds_probed,
                        bottleneck: result.bottleneck,
                        ..blank(algo, rep, result.status.to_string())
                    },
                    Err(err) => blank(algo, rep, format!("error: {err:?}")),
                });
            }
        }
    }
    records
}

/// `(family, n, m, B, seed)`: identifies one generated instance.
pub type InstanceKey = (String, usize, usize, i64, u64);

/// Instances on which successful runs disagree on status or bottleneck.
pub fn disagreements(records: &[BenchRecord]) -> Vec<InstanceKey> {
    let mut seen: BTreeMap<InstanceKey, (&str, Option<i64>)> = BTreeMap::new();
    let mut bad = Vec::new();
    for r in records.iter().filter(|r| !r.is_failure()) {
        let key = (r.family.clone(), r.n, r.m, r.balance, r.seed);
        let answer = (r.status.as_str(), r.bottleneck);
        match seen.get(&key) {
            Some(&first) if first != answer && !bad.contains(&key) => bad.push(key),
            Some(_) => {}
            None => {
                seen.insert(key, answer);
            }
        }
    }
    bad
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    if records.is_empty() {
        writer.write_record(CSV_HEADER.split(','))?;
    }
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush()?;
    Ok(())
}
