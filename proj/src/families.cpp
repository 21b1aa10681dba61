#include "alg2/families.hpp"

namespace alg2 {

int family_arity(Family f) {
    switch (f) {
        case Family::A1: return 1;
        case Family::A2: return 0;
        case Family::A3: return 0;
        case Family::A4: return 1;
        case Family::B1: return 1;
        case Family::B2: return 1;
        case Family::B3: return 0;
        case Family::C: return 2;
        case Family::D1: return 2;
        case Family::D2: return 2;
        case Family::D3: return 2;
        case Family::E1: return 4;
        case Family::E2: return 3;
        case Family::E3: return 3;
        case Family::E4: return 0;
        case Family::E5: return 1;
        case Family::Trivial: return 0;
    }
    return 0;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::A1: return "A1";
        case Family::A2: return "A2";
        case Family::A3: return "A3";
        case Family::A4: return "A4";
        case Family::B1: return "B1";
        case Family::B2: return "B2";
        case Family::B3: return "B3";
        case Family::C: return "C";
        case Family::D1: return "D1";
        case Family::D2: return "D2";
        case Family::D3: return "D3";
        case Family::E1: return "E1";
        case Family::E2: return "E2";
        case Family::E3: return "E3";
        case Family::E4: return "E4";
        case Family::E5: return "E5";
        case Family::Trivial: return "TRIVIAL";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (Family f : all_families())
        if (name == family_name(f)) return f;
    if (name == "k2" || name == "k^2" || name == "0") return Family::Trivial;
    return std::nullopt;
}

std::vector<Family> all_families() {
    return {Family::A1, Family::A2, Family::A3, Family::A4, Family::B1, Family::B2,
            Family::B3, Family::C,  Family::D1, Family::D2, Family::D3, Family::E1,
            Family::E2, Family::E3, Family::E4, Family::E5, Family::Trivial};
}

}  // namespace alg2
