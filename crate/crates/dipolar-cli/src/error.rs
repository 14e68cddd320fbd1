use std::fmt;

/// How many spins the dense N-spin path accepts before refusing.
pub const MAX_SPINS: usize = 14;

/// Front-end failures and their process exit codes: domain errors exit 3,
/// output-path errors exit 4, the spin-count guard exits 5 (flag parse
/// errors exit 2 via clap).
#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Output(String),
    TooManySpins(usize),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(msg) => write!(f, "{msg}"),
            CliError::Output(msg) => write!(f, "{msg}"),
            CliError::TooManySpins(n) => {
                write!(f, "{n} spins exceed the resource guard of {MAX_SPINS}")
            }
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 3,
            CliError::Output(_) => 4,
            CliError::TooManySpins(_) => 5,
        }
    }
}

impl From<dipolar::Error> for CliError {
    fn from(e: dipolar::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}
