//! Working-precision selection. Evaluations normally start at hardware
//! precision and escalate to the double-double backend only when the
//! cancellation certificate says the f64 result cannot honour the requested
//! accuracy; a policy can pin either backend for testing or benchmarking.

/// The scalar backend an evaluation runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WorkingPrecision {
    /// Native f64 (~15.9 significant digits).
    Hardware,
    /// Software double-double (~31 significant digits, ~10–20× slower).
    Extended,
}

impl WorkingPrecision {
    pub fn name(self) -> &'static str {
        match self {
            WorkingPrecision::Hardware => "hardware",
            WorkingPrecision::Extended => "extended",
        }
    }
}

/// How the engine chooses the backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BackendPolicy {
    /// Start at hardware precision, escalate on a failed cancellation check.
    #[default]
    Auto,
    /// Always use the given backend; a failed check at the forced backend
    /// surfaces as a precision-exhausted error instead of escalating.
    Force(WorkingPrecision),
}

impl BackendPolicy {
    /// Parse the textual form used by the CLI env override.
    pub fn parse(name: &str) -> Option<BackendPolicy> {
        match name.trim().to_ascii_lowercase().as_str() {
            "auto" => Some(BackendPolicy::Auto),
            "hardware" => Some(BackendPolicy::Force(WorkingPrecision::Hardware)),
            "extended" => Some(BackendPolicy::Force(WorkingPrecision::Extended)),
            _ => None,
        }
    }
}
