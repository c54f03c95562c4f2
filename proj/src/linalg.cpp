#include "bisum/rat.hpp"
