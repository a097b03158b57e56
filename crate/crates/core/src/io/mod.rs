//! File formats, instance generators and the benchmark harness.

pub mod bench;
pub mod format;
pub mod generate;

pub use bench::{disagreements, run_bench, write_csv, BenchFile, BenchRecord, InstanceKey, CSV_HEADER};
pub use format::{parse_instance, parse_solution, write_instance, write_solution, ParseError, ParseErrorKind, SolutionFile};
pub use generate::{generate_instance, Family, GenerateError, GeneratorSpec};
