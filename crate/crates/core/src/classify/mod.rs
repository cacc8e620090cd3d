//! Classification predicates: the square conditions, the derived 0-1 graph,
//! unmixedness, the domain property, the full MSC report and the structural
//! audits available for domains.

mod audit;
mod derived;
mod properties;
mod report;
mod square;

pub use audit::{component_flip_covers, structural_domain_audit, Violation};
pub use derived::{g01, DerivedGraph, G01Strategy};
pub use properties::{
    domain_counterexample_search, is_domain, is_unmixed, norm_spectrum, DomainCounterexample,
    DomainStrategy, Unmixedness,
};
pub use report::{classify_full, ClassificationReport, Condition, Evaluation, Settings, Witnesses};
pub use square::{check_msc, check_sc, check_wsc, edge_square_condition, verify_msc_witness};
