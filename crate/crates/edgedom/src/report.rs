use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use edgedom_core::ExtNat;

/// Output of one command. Everything except `wall_ms` is a function of the
/// input bytes and flags.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: Value,
    pub input_digest: String,
    pub result: Value,
    pub wall_ms: f64,
}

impl RunReport {
    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "wall_ms": self.wall_ms,
        })
    }
}

/// Lowercase hex SHA-256.
pub fn digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// A number, or `"unbounded"` for ∞.
pub fn ext_json(x: ExtNat) -> Value {
    match x.get() {
        Some(v) => json!(v),
        None => json!("unbounded"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(
            digest(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }

    #[test]
    fn infinity_is_a_word() {
        assert_eq!(ext_json(ExtNat::INF), json!("unbounded"));
        assert_eq!(ext_json(ExtNat::from(3)), json!(3));
    }
}
