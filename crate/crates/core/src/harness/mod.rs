//! Claim verification, table reproduction and conjecture scans.

mod claims;
mod conjectures;
mod fixtures;
mod report;
mod sweep;
mod tables;

pub use claims::{render_shapes, ClaimInstance, ClaimValues, GroundTruth, Status};
pub use conjectures::{conjecture_scan, ConjectureReport, ConjectureStatus, Counterexample};
pub use fixtures::{Cell, TableFixture, TableId, TABLE1_LABELS};
pub use report::{to_csv_string, write_csv};
pub use sweep::{verify_claim_sweep, ClaimKind, SweepConfig, SweepSummary};
pub use tables::{distance_table_as_expected, reproduce_component_table, reproduce_distance_table};
