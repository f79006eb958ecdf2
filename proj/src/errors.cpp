#include "est/errors.hpp"

#include <iostream>
#include <mutex>

namespace est {

namespace {

std::mutex& handler_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler& handler_slot() {
    static WarningHandler h;
    return h;
}

}  // namespace

void set_warning_handler(WarningHandler handler) {
    std::lock_guard<std::mutex> lock(handler_mutex());
    handler_slot() = std::move(handler);
}

void warn(const std::string& message) {
    WarningHandler h;
    {
        std::lock_guard<std::mutex> lock(handler_mutex());
        h = handler_slot();
    }
    if (h) {
        h(message);
    } else {
        std::cerr << "warning: " << message << '\n';
    }
}

}  // namespace est
