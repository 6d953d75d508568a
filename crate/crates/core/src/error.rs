use thiserror::Error;

use crate::code::{Codeword, ConnectivityWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("neuron index 0 is not allowed (neurons are numbered from 1)")]
    ZeroIndex,
    #[error("neuron index {0} exceeds the maximum of 64")]
    IndexTooLarge(usize),
    #[error("{0} neurons requested, at most 64 are supported")]
    TooManyNeurons(usize),
    #[error("codeword {word} references a neuron above n = {n}")]
    NeuronOutOfRange { word: Codeword, n: usize },
    #[error("invalid document: {0}")]
    Document(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grids must have 1, 2 or 3 axes, got {0}")]
    BadDimension(usize),
    #[error("every extent must be positive")]
    ZeroExtent,
    #[error("grid of {cells} cells exceeds the budget of {budget}")]
    TooLarge { cells: u128, budget: usize },
    #[error("expected {expected} cells, found {found}")]
    CellCount { expected: usize, found: usize },
    #[error("cell label {word} references a neuron above n = {n}")]
    LabelOutOfRange { word: Codeword, n: usize },
    #[error("cell index {cell} outside a grid of {cells} cells")]
    CellOutOfRange { cell: usize, cells: usize },
    #[error("invalid document: {0}")]
    Document(String),
}

/// The input code fails the chain criterion, so no connected realization exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("code is not connected: {0}")]
pub struct NotConnected(pub ConnectivityWitness);
