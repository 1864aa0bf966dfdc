#include "zetabound/report.hpp"

namespace zetabound {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::proved: return "proved";
    case Status::refuted: return "refuted";
    case Status::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Status worst(Status a, Status b)
{
    auto rank = [](Status s) {
        switch (s) {
        case Status::proved: return 0;
        case Status::inconclusive: return 1;
        case Status::refuted: return 2;
        }
        return 1;
    };
    return rank(a) >= rank(b) ? a : b;
}

}  // namespace zetabound
