//! Process exit codes, as total functions of reports and errors.
//!
//! | code | meaning                                                        |
//! |------|----------------------------------------------------------------|
//! | 0    | success: diagram is Ptolemy / mutation result is closed / all suites pass |
//! | 1    | input diagram is not Ptolemy, or a verification suite failed   |
//! | 2    | parse error, unreadable input, bad arguments, size limit       |
//! | 3    | mutation performed but its result is not extension-closed      |
//! | 4    | mutated diagonal is not Ext-projective (resp. Ext-injective)   |
//! | 5    | the service could not bind its port                            |

use ptolemy_core::verify::SuiteReport;
use ptolemy_core::{Error, MutationReport};

use crate::analysis::AnalysisReport;

pub const OK: u8 = 0;
pub const INVALID: u8 = 1;
pub const USAGE: u8 = 2;
pub const NOT_CLOSED: u8 = 3;
pub const NOT_DISSECTING: u8 = 4;
pub const BIND_FAILURE: u8 = 5;

pub fn for_analysis(report: &AnalysisReport) -> u8 {
    if report.ptolemy {
        OK
    } else {
        INVALID
    }
}

pub fn for_mutation(report: &MutationReport) -> u8 {
    if report.extension_closed {
        OK
    } else {
        NOT_CLOSED
    }
}

pub fn for_suites(reports: &[SuiteReport]) -> u8 {
    if reports.iter().all(SuiteReport::passed) {
        OK
    } else {
        INVALID
    }
}

pub fn for_error(error: &Error) -> u8 {
    match error {
        Error::NotPtolemy { .. } => INVALID,
        Error::NotAMember { .. }
        | Error::NotExtProjective { .. }
        | Error::NotExtInjective { .. } => NOT_DISSECTING,
        Error::Parse(_)
        | Error::PolygonTooSmall(_)
        | Error::NotADiagonal { .. }
        | Error::NotAnArc { .. }
        | Error::SizeLimit { .. }
        | Error::PreconditionViolation(_)
        | Error::NotCrossing { .. } => USAGE,
    }
}
