use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("vector has {got} entries but the space lives in dimension {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("threshold vector has {got} entries but the space has rank {want}")]
    ThresholdLength { got: usize, want: usize },
    #[error("threshold vector must be sorted ascending (entry {index} decreases)")]
    UnsortedThresholds { index: usize },
    #[error("matrix rows have inconsistent lengths (row {row}: {got}, expected {want})")]
    RaggedMatrix { row: usize, got: usize, want: usize },
    #[error("right-hand side has {got} entries but the matrix has {want} rows")]
    RhsLength { got: usize, want: usize },
    #[error("negative right-hand side entry at row {row}")]
    NegativeRhs { row: usize },
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error("solution search exceeded its node budget of {budget}")]
    BudgetExceeded { budget: u64 },
}
