//! `{"m": 3, "terms": [{"h": [5,1,1,1], "e": [3,3], "coeff": "1"}, …]}` for elements and
//! `{"m": 3, "h": [5,1,1,1], "e": [3,3]}` for pairs.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{BasisKey, Modulus, PairPartition, Partition};
use crate::error::{GammaError, Result};
use crate::ring::RingElement;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementDoc {
    m: u32,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    h: Vec<u32>,
    e: Vec<u32>,
    coeff: String,
}

impl From<&RingElement> for ElementDoc {
    fn from(a: &RingElement) -> Self {
        ElementDoc {
            m: a.modulus().get(),
            terms: a
                .terms()
                .map(|(k, c)| TermDoc {
                    h: k.h_index().parts().to_vec(),
                    e: k.e_index().parts().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<ElementDoc> for RingElement {
    type Error = GammaError;

    fn try_from(doc: ElementDoc) -> Result<Self> {
        let m = Modulus::new(doc.m)?;
        let mut out = RingElement::zero(m);
        for term in doc.terms {
            let coeff: BigInt = term.coeff.parse().map_err(|_| {
                GammaError::Json(format!("coefficient {:?} is not an integer", term.coeff))
            })?;
            if coeff.is_zero() {
                return Err(GammaError::Json("zero coefficients are not allowed".into()));
            }
            let key = BasisKey::new(Partition::new(term.h)?, Partition::new(term.e)?, m)?;
            if !out.coefficient(&key)?.is_zero() {
                return Err(GammaError::Json(format!("duplicate term {key}")));
            }
            out.add_term(key, coeff);
        }
        Ok(out)
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = ElementDoc::deserialize(deserializer)?;
        RingElement::try_from(doc).map_err(serde::de::Error::custom)
    }
}

impl RingElement {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("element serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    m: u32,
    h: Vec<u32>,
    e: Vec<u32>,
}

impl Serialize for PairPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PairDoc {
            m: self.modulus().get(),
            h: self.first().parts().to_vec(),
            e: self.second().parts().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PairPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let doc = PairDoc::deserialize(deserializer)?;
        let parsed = (|| {
            PairPartition::new(
                Partition::new(doc.h)?,
                Partition::new(doc.e)?,
                Modulus::new(doc.m)?,
            )
        })();
        parsed.map_err(serde::de::Error::custom)
    }
}
