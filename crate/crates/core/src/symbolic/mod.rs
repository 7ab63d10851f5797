//! Exact polynomial arithmetic over `Z`, the tensor algebra `S ⊗ T` over the
//! universal base `Z[t, n, s, m]`, and the identity catalogue.

mod identities;
mod poly;
mod tensor;

pub use identities::{
    identity_components, verify_all, verify_named_identity, IdentityComponent, IdentityReport,
    CATALOGUE,
};
pub use poly::MultiPoly;
pub use tensor::TensorElement;
