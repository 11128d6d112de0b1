import unittest
from unittest import mock
from davenport_library.config import CACHE_DIR_VARIABLE, DEFAULT_MEMORY_CAP, THREADS_VARIABLE, EngineConfig

class TestEngineConfig(unittest.TestCase):
    def test_defaults(self):
        """
        Test the default configuration.
        """
        config = EngineConfig()
        self.assertEqual(config.threads, 1)
        self.assertIsNone(config.max_level)
        self.assertEqual(config.memory_cap_bytes, DEFAULT_MEMORY_CAP)
        self.assertIsNone(config.cache_dir)

    def test_from_environment(self):
        """
        Test that the environment sets the cache directory and the worker count.
        """
        with mock.patch.dict('os.environ', {CACHE_DIR_VARIABLE: '/tmp/dav', THREADS_VARIABLE: '3'}):
            config = EngineConfig.from_environment()
        self.assertEqual(config.cache_dir, '/tmp/dav')
        self.assertEqual(config.threads, 3)

    def test_overrides(self):
        """
        Test that explicit values win over the environment and None values are ignored.
        """
        with mock.patch.dict('os.environ', {CACHE_DIR_VARIABLE: '/tmp/dav', THREADS_VARIABLE: '0'}):
            config = EngineConfig.from_environment(threads=None, max_level=4, cache_dir='/tmp/other')
        self.assertEqual(config.threads, 1)
        self.assertEqual(config.max_level, 4)
        self.assertEqual(config.cache_dir, '/tmp/other')

    def test_parameters_exclude_threads(self):
        """
        Test that the worker count is not part of the result parameters.
        """
        parameters = EngineConfig(threads=8, max_level=3).to_parameters()
        self.assertNotIn('threads', parameters)
        self.assertEqual(parameters['max_level'], 3)

if __name__ == '__main__':
    unittest.main()
