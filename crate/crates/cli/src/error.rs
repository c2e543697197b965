use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fuzzycat_core::Error),

    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(fuzzycat_core::Error::BudgetExceeded { .. }) => 3,
            _ => 2,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self.exit_code() {
            3 => "budget-exceeded",
            _ => "input-error",
        }
    }
}
