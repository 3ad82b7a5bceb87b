use crate::factored::FactoredNat;
use crate::partition::Partition;
use crate::prime::Prime;

/// Product of all hook lengths of `mu`.
pub fn hook_product(mu: &Partition) -> FactoredNat {
    mu.hook_grid()
        .iter()
        .map(|h| FactoredNat::from_u64(h as u64))
        .product()
}

/// `dim S^mu = n! / prod h(i,j)`, independent of the field.
pub fn specht_dimension(mu: &Partition) -> FactoredNat {
    FactoredNat::factorial(mu.size() as u64)
        .checked_div(&hook_product(mu))
        .expect("hook product divides n!")
}

pub fn p_part(x: &FactoredNat, p: Prime) -> FactoredNat {
    x.p_part(p)
}
