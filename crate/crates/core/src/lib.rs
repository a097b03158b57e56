//! Bottleneck network flow: find a flow meeting every supply and demand
//! whose largest arc weight carrying flow is as small as possible.

pub mod bnfp;
pub mod graph;
pub mod maxflow;
pub mod oracle;
pub mod io;
