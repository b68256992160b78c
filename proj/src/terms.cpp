#include "nnov/terms.hpp"

#include <sstream>

namespace nnov {

Alphabet Alphabet::from_list(const std::string& list) {
    Alphabet a;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) a.intern(item);
    }
    if (a.size() == 0) throw std::invalid_argument("alphabet list is empty");
    return a;
}

}  // namespace nnov
