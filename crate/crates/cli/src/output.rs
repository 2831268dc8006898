use kostka::QPoly;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Machine-readable polynomial: dense coefficients from the valuation up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyOutput {
    pub valuation: i64,
    #[serde(with = "bigints")]
    pub coeffs: Vec<BigInt>,
    pub pretty: String,
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
}

impl PolyOutput {
    pub fn new(p: &QPoly, method: &str) -> Self {
        PolyOutput {
            valuation: p.valuation().unwrap_or(0),
            coeffs: p.coeffs().to_vec(),
            pretty: p.pretty(),
            method: method.to_string(),
            citation: None,
        }
    }

    pub fn poly(&self) -> QPoly {
        QPoly::from_coeffs(self.valuation, self.coeffs.clone())
    }
}

/// Big integers as exact JSON numbers.
mod bigints {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Number;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let nums: Vec<Number> = v.iter().map(|c| c.to_string().parse().expect("integer literal")).collect();
        nums.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let nums = Vec::<Number>::deserialize(d)?;
        nums.iter().map(|n| n.to_string().parse::<BigInt>().map_err(D::Error::custom)).collect()
    }
}

pub fn big_json(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse().expect("integer literal"))
}

/// Result of a subcommand in both renderings.
pub enum Output {
    Poly(PolyOutput),
    Other { text: String, json: Value },
}

impl Output {
    pub fn poly(p: &QPoly, method: &str) -> Self {
        Output::Poly(PolyOutput::new(p, method))
    }

    pub fn int(v: &BigInt) -> Self {
        Output::Other { text: v.to_string(), json: serde_json::json!({ "value": big_json(v) }) }
    }

    pub fn render(&self, json: bool) -> String {
        match (self, json) {
            (Output::Poly(p), false) => p.pretty.clone(),
            (Output::Poly(p), true) => serde_json::to_string(p).expect("serializable"),
            (Output::Other { text, .. }, false) => text.clone(),
            (Output::Other { json, .. }, true) => json.to_string(),
        }
    }
}
