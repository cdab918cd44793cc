#pragma once

#include <stdexcept>
#include <string>

namespace latsym {

struct ZeroDenominator : std::runtime_error {
    explicit ZeroDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct NotSeriesExpandable : std::runtime_error {
    explicit NotSeriesExpandable(const std::string& what) : std::runtime_error(what) {}
};

struct NotHorizontalStrip : std::runtime_error {
    explicit NotHorizontalStrip(const std::string& what) : std::runtime_error(what) {}
};

struct IndexTooSmall : std::runtime_error {
    explicit IndexTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct WidthTooSmall : std::runtime_error {
    explicit WidthTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooSmall : std::runtime_error {
    explicit GridTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NotTriangular : std::runtime_error {
    explicit NotTriangular(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latsym
