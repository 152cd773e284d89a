#ifndef LSO_LSO_HPP
#define LSO_LSO_HPP

#include "errors.hpp"
#include "flip.hpp"
#include "graph_recognition.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "orientation.hpp"
#include "poset.hpp"
#include "recognizer.hpp"
#include "semiorder.hpp"
#include "svg.hpp"
#include "two_sat.hpp"

#endif  // LSO_LSO_HPP
