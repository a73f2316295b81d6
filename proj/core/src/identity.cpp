#include "affverma/identity.hpp"

namespace affverma {

IdentityCheck check_identity(const verma::Module& m, const Identity& id, const verma::State& source) {
    IdentityCheck c;
    c.name = id.name;
    c.instance = id.instance;
    c.lhs = m.apply_word(id.lhs, source);
    c.rhs = m.apply_word(id.rhs, verma::State::vacuum());
    c.difference = c.lhs - c.rhs;
    c.lhs_grade = m.grade(c.lhs);
    c.pass = c.difference.is_zero();
    return c;
}

}  // namespace affverma
