//! Instance data model, auxiliary source/sink graph, weight ladder and
//! residual views shared by every solver.

mod aux;
mod flow;
mod instance;
mod ladder;

pub use aux::{AdjEntry, AuxGraph, AuxNode};
pub use flow::{FlowError, FlowState, FlowViolation, Path, ResidualArc, ResidualEdge, ResidualView};
pub use instance::{Arc, BalancePartition, Instance, InstanceError, NodeId};
pub use ladder::{LadderError, ThresholdLadder};
