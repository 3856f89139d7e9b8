use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("enumeration budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: String, budget: u64 },

    #[error("subset budget exceeded: {n} coordinates > maximum {max}")]
    SubsetBudgetExceeded { n: usize, max: usize },

    #[error("no value of chi({group}\\Hom(G,{group})) is available for G = {gamma}")]
    UnsupportedGamma { group: String, gamma: String },

    #[error("real S1 formula requires nonzero weights; weight {0} is zero")]
    RejectsZeroWeight(usize),

    #[error("the free-group O(2) formula is stated for rank >= 2; normalize F1 to Z first")]
    FreeEllOne,

    #[error("Burnside sum {sum} is not divisible by group order {order}")]
    NonIntegralBurnside { sum: String, order: usize },

    #[error("inexact division in {0}")]
    InexactDivision(&'static str),
}
