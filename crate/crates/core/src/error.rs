use alloc::string::String;

use thiserror::Error;

use crate::census::Signature;

pub type Result<T, E = GroupError> = core::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("{constructor}: invalid parameter {value}: {reason}")]
    InvalidParameter {
        constructor: &'static str,
        value: usize,
        reason: &'static str,
    },
    #[error("group order {order} exceeds the supported maximum {max}")]
    OrderOverflow { order: usize, max: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("permutation closure exceeded {max} elements (reached {partial} before stopping)")]
    ClosureTooLarge { partial: usize, max: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generators have mismatched degrees {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid automorphism action: {0}")]
    InvalidAction(String),
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("isomorphism testing is only supported up to order {max}, got order {order}")]
    UnsupportedOrder { order: usize, max: usize },
    #[error("element {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("signature {0} is unclassified")]
    Unclassified(Signature),
    #[error("deficiency {value} outside the supported range {min}..={max}")]
    DeltaOutOfRange {
        value: usize,
        min: usize,
        max: usize,
    },
}
