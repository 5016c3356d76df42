use serde::{Deserialize, Serialize};

/// Symbolic parameters of a class that has no permutation representative,
/// e.g. `{"family": "hyperbolic", "params": [1, 2]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDescriptor {
    pub family: String,
    pub params: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub label: String,
    pub size: u64,
    #[serde(rename = "order")]
    pub element_order: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub descriptor: Option<ClassDescriptor>,
}

/// Class metadata shared by every class function on a group: sizes,
/// element orders and the power maps needed downstream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLayout {
    pub name: String,
    pub group_order: u64,
    pub classes: Vec<ClassInfo>,
    /// Class of `g²` for `g` in each class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power2: Option<Vec<usize>>,
    /// Class of `g⁻¹` for `g` in each class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<usize>>,
}

impl ClassLayout {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn centralizer_order(&self, class: usize) -> u64 {
        self.group_order / self.classes[class].size
    }

    /// Index of the class of the identity element.
    pub fn identity_class(&self) -> usize {
        self.classes
            .iter()
            .position(|c| c.element_order == 1)
            .unwrap_or(0)
    }

    /// Structural consistency: sizes add up to the group order.
    pub fn check(&self) -> Result<(), String> {
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.group_order {
            return Err(format!(
                "class sizes sum to {total}, group order is {}",
                self.group_order
            ));
        }
        for map in [&self.power2, &self.inverse].into_iter().flatten() {
            if map.len() != self.classes.len() || map.iter().any(|&c| c >= self.classes.len()) {
                return Err("power map does not match the class list".into());
            }
        }
        Ok(())
    }
}
