use std::process::ExitCode;

use girthlab::cert::CertError;
use girthlab::graph::GraphError;
use girthlab::odd_girth::OddGirthError;
use girthlab::recurrence::RecurrenceError;
use girthlab::sim::SimError;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Invalid arguments or inputs; exit code 2.
    Precondition,
    /// The computation broke down numerically; exit code 3.
    Numerical,
    /// An internal consistency check failed; exit code 1.
    Internal,
}

#[derive(Debug, Serialize)]
pub struct CliError {
    pub error: Kind,
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        let code = match kind {
            Kind::Precondition => 2,
            Kind::Numerical => 3,
            Kind::Internal => 1,
        };
        Self { error: kind, code, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Self::new(Kind::Precondition, message)
    }

    pub fn usage(rendered: String) -> Self {
        // Fold clap's message into one line, dropping the usage footer.
        let text = rendered
            .lines()
            .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect::<Vec<_>>()
            .join(" ");
        Self::precondition(text.trim_start_matches("error: ").to_string())
    }

    pub fn report(&self) -> ExitCode {
        eprintln!("{}", serde_json::to_string(self).expect("error serializes"));
        ExitCode::from(self.code)
    }
}

impl From<RecurrenceError> for CliError {
    fn from(e: RecurrenceError) -> Self {
        let kind = match e {
            RecurrenceError::InvalidParams(_) => Kind::Precondition,
            _ => Kind::Numerical,
        };
        Self::new(kind, e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        Self::precondition(e.to_string())
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        let kind = match e {
            SimError::InvalidParams(_) => Kind::Precondition,
            _ => Kind::Internal,
        };
        Self::new(kind, e.to_string())
    }
}

impl From<CertError> for CliError {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Sim(s) => s.into(),
            other => Self::precondition(other.to_string()),
        }
    }
}

impl From<OddGirthError> for CliError {
    fn from(e: OddGirthError) -> Self {
        match e {
            OddGirthError::Graph(g) => g.into(),
            OddGirthError::Cert(c) => c.into(),
            OddGirthError::NoMatching | OddGirthError::NotIndependent(..) => Self::new(Kind::Internal, e.to_string()),
            other => Self::precondition(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::precondition(format!("i/o: {e}"))
    }
}
