#include "kcn/window.hpp"

namespace kcn {

std::vector<TimeWindow> default_windows() {
    return {
        make_window(2002, 2006),
        make_window(2007, 2011),
        make_window(2012, 2016),
        make_window(2017, 2021),
    };
}

}  // namespace kcn
